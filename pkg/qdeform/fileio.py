"""
flat file formats

matrix files: line 1 holds the dimension d, the next d lines hold d
whitespace separated complex entries written a+bi or a-bi, e.g.

    2
    0.5+0i 0+0.5i
    0-0.5i 0.5+0i

sweep files: CSV with header p,q,I_T,S_joint,S_first,S_second and values
written with 17 significant digits
"""
import re
import warnings

import numpy as np

from .constants import SWEEP_HEADER, SEPARABLE_BOUNDARY
from .errors import MatrixParseError
from .inequalities import SweepResult

_REAL = r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'
_COMPLEX_RE = re.compile(
    r'^(?P<re>[+-]?%s)(?P<sign>[+-])(?P<im>%s)i$' % (_REAL, _REAL)
)
_TOKEN_RE = re.compile(r'\S+')


def parse_complex(token):
    """
    parse one a+bi / a-bi literal; the imaginary part is mandatory

    Returns
    -------
    complex, or None when the token does not match the grammar
    """
    match = _COMPLEX_RE.match(token)
    if match is None:
        return None

    imag = float(match.group('im'))
    if match.group('sign') == '-':
        imag = -imag
    return complex(float(match.group('re')), imag)


def format_complex(z):
    """
    write a complex number as a+bi with 17 significant digits
    """
    z = complex(z)
    sign = '-' if np.signbit(z.imag) else '+'
    return '%.17g%s%.17gi' % (z.real, sign, abs(z.imag))


def parse_matrix(text):
    """
    parse the text of a matrix file

    Parameters
    ----------
    text: str
        File contents

    Returns
    -------
    d x d complex array

    Raises
    ------
    MatrixParseError carrying the 1-based line and column
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MatrixParseError('missing dimension', line=1)

    header = lines[0].strip()
    if not re.match(r'^\d+$', header) or int(header) < 1:
        raise MatrixParseError(
            'dimension must be a positive integer, got %r' % header, line=1,
        )
    d = int(header)

    m = np.zeros((d, d), dtype='c16')
    for row in range(d):
        lineno = row + 2
        if lineno > len(lines):
            raise MatrixParseError(
                'expected %d matrix rows, file ends after %d' % (d, row),
                line=lineno,
            )

        tokens = list(_TOKEN_RE.finditer(lines[lineno-1]))
        if len(tokens) != d:
            raise MatrixParseError(
                'expected %d entries, got %d' % (d, len(tokens)),
                line=lineno,
            )

        for col, token in enumerate(tokens):
            value = parse_complex(token.group())
            if value is None:
                raise MatrixParseError(
                    'bad complex literal %r, expected a+bi or a-bi'
                    % token.group(),
                    line=lineno,
                    column=token.start() + 1,
                )
            if not np.isfinite(value):
                raise MatrixParseError(
                    'entry %r is not a finite number' % token.group(),
                    line=lineno,
                    column=token.start() + 1,
                )
            m[row, col] = value

    for lineno in range(d + 2, len(lines) + 1):
        if lines[lineno-1].strip():
            raise MatrixParseError(
                'unexpected content after %d matrix rows' % d, line=lineno,
            )

    return m


def read_matrix_file(path):
    """
    read a matrix file

    Parameters
    ----------
    path: str or Path

    Returns
    -------
    d x d complex array
    """
    with open(path, 'rb') as fobj:
        raw = fobj.read()

    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as err:
        line_start = raw.rfind(b'\n', 0, err.start) + 1
        raise MatrixParseError(
            'file is not valid UTF-8',
            line=raw.count(b'\n', 0, err.start) + 1,
            column=err.start - line_start + 1,
        )

    return parse_matrix(text)


def format_matrix(m):
    """
    text of a matrix file for the square matrix m
    """
    m = np.asarray(m, dtype='c16')
    lines = ['%d' % m.shape[0]]
    for row in m:
        lines.append(' '.join(format_complex(z) for z in row))
    return '\n'.join(lines) + '\n'


def write_matrix_file(path, m):
    """
    write a matrix file with 17 significant digits per real number
    """
    with open(path, 'w', encoding='utf-8') as fobj:
        fobj.write(format_matrix(m))


def write_sweep_csv(path, sweep):
    """
    write a sweep as CSV

    Parameters
    ----------
    path: str or Path
    sweep: SweepResult
    """
    np.savetxt(
        path,
        sweep.to_array(),
        fmt='%.17g',
        delimiter=',',
        header=','.join(SWEEP_HEADER),
        comments='',
    )


def read_sweep_csv(path, boundary_p=SEPARABLE_BOUNDARY):
    """
    read a sweep written by write_sweep_csv

    Returns
    -------
    SweepResult
    """
    with open(path, encoding='utf-8') as fobj:
        header = fobj.readline().strip()

    if header != ','.join(SWEEP_HEADER):
        raise ValueError(
            'unexpected sweep header %r in %s' % (header, path)
        )

    with warnings.catch_warnings():
        # a header-only file is a valid empty sweep
        warnings.simplefilter('ignore', UserWarning)
        data = np.loadtxt(
            path, delimiter=',', skiprows=1, ndmin=2, dtype='f8',
        )

    if data.size == 0:
        return SweepResult([], boundary_p=boundary_p)
    return SweepResult(data.tolist(), boundary_p=boundary_p)


def write_gnuplot_script(path, csv_path, q_values, image_path=None):
    """
    write a gnuplot script drawing I_T against p, one curve per q, with a
    dashed line at the separable/entangled boundary

    Parameters
    ----------
    path: str or Path
        Script to write
    csv_path: str or Path
        The sweep CSV the script reads
    q_values: sequence of float
        One curve per value
    image_path: str, optional
        When given the script renders a png there instead of a window
    """
    lines = []
    if image_path is not None:
        lines += [
            'set terminal pngcairo size 800,500',
            "set output '%s'" % image_path,
        ]

    lines += [
        "set datafile separator ','",
        'set key autotitle columnhead',
        "set xlabel 'p'",
        "set ylabel 'I_q^T'",
        'set arrow from %.17g, graph 0 to %.17g, graph 1 nohead dt 2' % (
            SEPARABLE_BOUNDARY, SEPARABLE_BOUNDARY,
        ),
    ]

    curves = []
    for q in q_values:
        curves.append(
            "'%s' using 1:(abs($2 - %.17g) < 1e-12 ? $3 : 1/0) "
            "with lines title 'q = %g'" % (csv_path, q, q)
        )
    if curves:
        lines.append('plot ' + ', \\\n     '.join(curves))

    with open(path, 'w', encoding='utf-8') as fobj:
        fobj.write('\n'.join(lines) + '\n')
