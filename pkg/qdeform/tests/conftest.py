import numpy as np
import pytest

from qdeform.labelings import Bipartite
from qdeform.states import random_density, random_x_params

NSTATES = 1000


@pytest.fixture(scope='session')
def ginibre_pairs():
    """
    seeded Ginibre two-qubit states, the ensemble the inequality checks run
    over
    """
    return [
        random_density(seed, 4, dims=Bipartite(2, 2))
        for seed in range(NSTATES)
    ]


@pytest.fixture(scope='session')
def x_params():
    return [random_x_params(seed) for seed in range(NSTATES)]


@pytest.fixture
def rng():
    return np.random.default_rng(8312)
