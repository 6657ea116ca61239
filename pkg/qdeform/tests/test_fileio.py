import numpy as np
import pytest

from qdeform.constants import SEPARABLE_BOUNDARY
from qdeform.errors import MatrixParseError
from qdeform.fileio import (
    parse_complex,
    format_complex,
    parse_matrix,
    read_matrix_file,
    write_matrix_file,
    read_sweep_csv,
    write_sweep_csv,
    write_gnuplot_script,
)
from qdeform.inequalities import werner_q_information_curve


@pytest.mark.parametrize(
    'token,expected',
    [
        ('0.5+0i', 0.5),
        ('0+0.5i', 0.5j),
        ('-0.25-1.5i', -0.25 - 1.5j),
        ('1e-3+2.5E+2i', 1e-3 + 250j),
        ('.5-.5i', 0.5 - 0.5j),
        ('+1+0i', 1.0),
    ],
)
def test_parse_complex(token, expected):
    assert parse_complex(token) == expected


@pytest.mark.parametrize(
    'token', ['0.5', '1+i', 'i', '0.5+0j', '1+2i3', 'nan+0i', '1++2i'],
)
def test_parse_complex_rejects(token):
    assert parse_complex(token) is None


def test_format_complex():
    assert format_complex(0.5 - 0.25j) == '0.5-0.25i'
    assert format_complex(complex(1.0, -0.0)) == '1-0i'
    assert parse_complex(format_complex(0.1 + 0.2j)) == 0.1 + 0.2j


def test_parse_matrix():
    m = parse_matrix('2\n0.5+0i 0+0.5i\n0-0.5i 0.5+0i\n')
    np.testing.assert_array_equal(m, [[0.5, 0.5j], [-0.5j, 0.5]])

    # extra whitespace and trailing blank lines are fine
    m = parse_matrix('  1 \n   1+0i   \n\n\n')
    np.testing.assert_array_equal(m, [[1.0]])


@pytest.mark.parametrize(
    'text,line,column',
    [
        ('', 1, None),
        ('two\n1+0i\n', 1, None),
        ('0\n', 1, None),
        ('2\n0.5+0i 0+0i\n', 3, None),
        ('2\n0.5+0i 0+0i 0+0i\n0+0i 0.5+0i\n', 2, None),
        ('2\n0.5+0i 0+0i\n0+0i  0.5x\n', 3, 7),
        ('1\n1+0i\n1+0i\n', 3, None),
        ('1\n1e999+0i\n', 2, 1),
        ('2\n0.5+0i 0+1e400i\n0+0i 0.5+0i\n', 2, 8),
    ],
)
def test_parse_matrix_errors(text, line, column):
    with pytest.raises(MatrixParseError) as excinfo:
        parse_matrix(text)

    err = excinfo.value
    assert err.line == line
    assert err.column == column
    assert str(err).startswith('line %d' % line)


def test_matrix_file_round_trip(tmp_path, rng):
    m = rng.standard_normal((4, 4)) + 1j*rng.standard_normal((4, 4))
    m[0, 0] = complex(0.1, -0.0)

    path = tmp_path / 'state.txt'
    write_matrix_file(path, m)
    np.testing.assert_array_equal(read_matrix_file(path), m)

    text = path.read_text()
    assert text.splitlines()[0] == '4'
    assert len(text.splitlines()) == 5


def test_sweep_csv(tmp_path):
    sweep = werner_q_information_curve(
        np.linspace(-1/3, 1, 7), [1.000001, 2.0],
    )

    path = tmp_path / 'sweep.csv'
    write_sweep_csv(path, sweep)

    lines = path.read_text().splitlines()
    assert lines[0] == 'p,q,I_T,S_joint,S_first,S_second'
    assert len(lines) == 15

    again = read_sweep_csv(path)
    np.testing.assert_array_equal(again.to_array(), sweep.to_array())
    assert again.boundary_p == SEPARABLE_BOUNDARY
    assert again.q_values == sweep.q_values


def test_sweep_csv_empty(tmp_path):
    path = tmp_path / 'empty.csv'
    write_sweep_csv(path, werner_q_information_curve([], [2.0]))

    assert path.read_text().strip() == 'p,q,I_T,S_joint,S_first,S_second'
    assert len(read_sweep_csv(path)) == 0


def test_sweep_csv_bad_header(tmp_path):
    path = tmp_path / 'bad.csv'
    path.write_text('a,b\n1,2\n')
    with pytest.raises(ValueError):
        read_sweep_csv(path)


def test_gnuplot_script(tmp_path):
    path = tmp_path / 'sweep.gp'
    write_gnuplot_script(path, 'sweep.csv', [1.000001, 2.0, 5.0])

    text = path.read_text()
    assert "set datafile separator ','" in text
    assert 'nohead dt 2' in text
    assert text.count("'sweep.csv' using") == 3
    assert 'pngcairo' not in text

    write_gnuplot_script(path, 'sweep.csv', [2.0], image_path='sweep.png')
    text = path.read_text()
    assert "set output 'sweep.png'" in text
    assert text.count("'sweep.csv' using") == 1


def test_read_matrix_file_not_utf8(tmp_path):
    path = tmp_path / 'latin.txt'
    path.write_bytes(b'1\n1+0i\xff\n')

    with pytest.raises(MatrixParseError) as excinfo:
        read_matrix_file(path)

    assert excinfo.value.line == 2
    assert excinfo.value.column == 5
