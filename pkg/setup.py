from setuptools import setup, find_packages

setup(
    name="qdeform",
    version="0.1.0",
    description=(
        "Tsallis and Renyi entropies and deformed entropic inequalities "
        "for two-qubit and spin-3/2 X-states"
    ),
    packages=find_packages(),
    install_requires=[
        'numpy',
        'matplotlib>=3.4',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': [
            'qdeform = qdeform.cli:main',
        ],
    },
    python_requires='>=3.8',
)
