from fractions import Fraction

import numpy as np
import pytest

from qdeform.errors import (
    InvalidDensityMatrix,
    NotHermitian,
    TraceNotOne,
    NotPSD,
    DimensionMismatch,
    InvalidXParams,
    ParamOutOfRange,
)
from qdeform.labelings import (
    Bipartite,
    Single,
    TWO_QUBIT,
    SPIN_THREE_HALVES,
    get_labeling,
    labeling_for_dims,
)
from qdeform.linalg import hermitian_eigen
from qdeform.states import (
    DensityMatrix,
    XStateParams,
    WernerParam,
    WernerState,
    validate_density,
    relabel,
    partial_trace_first,
    partial_trace_second,
    product_state,
    diagonal_probabilities,
    x_state,
    x_state_eigenvalues,
    werner_state,
    random_density,
    random_unitary,
    conjugate,
)

HALF = Fraction(1, 2)


def test_labelings():
    assert TWO_QUBIT.label(2) == (HALF, -HALF)
    assert TWO_QUBIT.index((-HALF, HALF)) == 3
    assert SPIN_THREE_HALVES.label(1) == 3*HALF
    assert SPIN_THREE_HALVES.index(-3*HALF) == 4
    assert SPIN_THREE_HALVES.format_label(3) == '-1/2'
    assert TWO_QUBIT.format_label(4) == '-1/2,-1/2'

    for labeling in [TWO_QUBIT, SPIN_THREE_HALVES]:
        for index in range(1, 5):
            assert labeling.index(labeling.label(index)) == index

    with pytest.raises(IndexError):
        TWO_QUBIT.label(5)
    with pytest.raises(KeyError):
        SPIN_THREE_HALVES.index(HALF*5)


def test_get_labeling():
    assert get_labeling('two-qubit') is TWO_QUBIT
    assert get_labeling(SPIN_THREE_HALVES) is SPIN_THREE_HALVES
    assert labeling_for_dims(Single(4)) is SPIN_THREE_HALVES
    assert labeling_for_dims(Bipartite(2, 2)) is TWO_QUBIT

    with pytest.raises(ValueError):
        get_labeling('qutrit')
    with pytest.raises(DimensionMismatch):
        labeling_for_dims(Single(3))


def test_validate_maximally_mixed():
    rho = validate_density(np.eye(4)/4)
    assert isinstance(rho, DensityMatrix)
    assert rho.dims == Single(4)
    np.testing.assert_allclose(rho.eigenvalues, 0.25, atol=1e-15)


def test_validate_reports_every_failure():
    with pytest.raises(InvalidDensityMatrix) as excinfo:
        validate_density(np.diag([0.5, 0.5, 0.5, -0.6]))

    assert excinfo.value.names == ['TraceNotOne', 'NotPSD']


@pytest.mark.parametrize(
    'matrix,error',
    [
        (np.array([[0.5, 0.1], [0.0, 0.5]]), NotHermitian),
        (np.eye(2)*0.45, TraceNotOne),
        (np.diag([1.2, -0.2]), NotPSD),
    ],
)
def test_validate_single_failure(matrix, error):
    with pytest.raises(error) as excinfo:
        validate_density(matrix)
    assert excinfo.value.names == [error.__name__]


def test_validate_tolerances():
    # rounding noise on the trace and spectrum is accepted
    validate_density(np.diag([0.5 + 5e-13, 0.5]))
    rho = validate_density(np.diag([1.0 + 5e-11, -5e-11]))
    assert rho.eigenvalues[-1] == 0.0


def test_validate_dims():
    rho = validate_density(np.eye(4)/4, dims=Bipartite(2, 2))
    assert rho.dims == Bipartite(2, 2)

    with pytest.raises(DimensionMismatch):
        validate_density(np.eye(4)/4, dims=Bipartite(2, 3))


def test_density_is_read_only():
    rho = werner_state(0.5)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0


def test_werner_valid_and_entangled():
    rho = werner_state(0.5)
    assert rho.is_entangled
    assert not werner_state(1/3).is_entangled
    assert not werner_state(-1/3).is_entangled

    np.testing.assert_allclose(
        rho.eigenvalues, [0.625, 0.125, 0.125, 0.125], atol=1e-15,
    )


@pytest.mark.parametrize('p', [-0.34, 1.01, np.nan])
def test_werner_out_of_range(p):
    with pytest.raises(ParamOutOfRange):
        WernerParam(p)


def test_relabel():
    rho = werner_state(0.5, dims=Bipartite(2, 2))
    spin = relabel(rho, 'two-qubit', 'spin32')
    assert spin.dims == Single(4)
    np.testing.assert_array_equal(spin.matrix, rho.matrix)

    back = relabel(spin, SPIN_THREE_HALVES, TWO_QUBIT)
    assert back.dims == Bipartite(2, 2)
    np.testing.assert_array_equal(back.matrix, rho.matrix)

    with pytest.raises(DimensionMismatch):
        relabel(validate_density(np.eye(2)/2), 'two-qubit', 'spin32')
    with pytest.raises(DimensionMismatch):
        relabel(rho, 'spin32', 'two-qubit')


def test_relabel_keeps_werner():
    rho = werner_state(0.5, dims=Bipartite(2, 2))
    spin = relabel(rho, 'two-qubit', 'spin32')

    assert isinstance(spin, WernerState)
    assert spin.p == 0.5
    assert spin.is_entangled
    assert spin.dims == Single(4)
    assert rho.dims == Bipartite(2, 2)


def test_relabel_preserves_entries():
    for seed in range(20):
        rho = random_density(seed, 4, dims=Bipartite(2, 2))
        there = relabel(rho, 'two-qubit', 'spin32')
        back = relabel(there, 'spin32', 'two-qubit')
        np.testing.assert_array_equal(back.matrix, rho.matrix)


def test_partial_trace_werner():
    for p in np.linspace(-1/3, 1, 100):
        rho = werner_state(p, dims=Bipartite(2, 2))
        for reduced in [partial_trace_second(rho), partial_trace_first(rho)]:
            np.testing.assert_allclose(
                reduced.matrix, np.eye(2)/2, rtol=0, atol=1e-15,
            )


def test_partial_trace_entries():
    m = np.arange(16, dtype='f8').reshape(4, 4)
    m = m + m.T
    m = m/np.trace(m) + np.eye(4)
    m = m/np.trace(m)
    rho = validate_density(m, dims=Bipartite(2, 2))
    r = rho.matrix

    np.testing.assert_allclose(
        partial_trace_second(rho).matrix,
        [[r[0, 0] + r[1, 1], r[0, 2] + r[1, 3]],
         [r[2, 0] + r[3, 1], r[2, 2] + r[3, 3]]],
        atol=1e-15,
    )
    np.testing.assert_allclose(
        partial_trace_first(rho).matrix,
        [[r[0, 0] + r[2, 2], r[0, 1] + r[2, 3]],
         [r[1, 0] + r[3, 2], r[1, 1] + r[3, 3]]],
        atol=1e-15,
    )


def test_partial_trace_product():
    for seed in range(20):
        rho_a = random_density(2*seed, 2)
        rho_b = random_density(2*seed + 1, 2)
        rho = product_state(rho_a, rho_b)
        assert rho.dims == Bipartite(2, 2)

        np.testing.assert_allclose(
            partial_trace_second(rho).matrix, rho_a.matrix, rtol=0, atol=1e-14,
        )
        np.testing.assert_allclose(
            partial_trace_first(rho).matrix, rho_b.matrix, rtol=0, atol=1e-14,
        )


def test_partial_trace_unequal_dims():
    rho = product_state(random_density(1, 2), random_density(2, 3))
    assert partial_trace_second(rho).dim == 2
    assert partial_trace_first(rho).dim == 3


def test_partial_trace_single_four():
    rho = werner_state(0.2)
    assert rho.dims == Single(4)
    np.testing.assert_allclose(
        partial_trace_second(rho).matrix, np.eye(2)/2, atol=1e-15,
    )

    with pytest.raises(DimensionMismatch):
        partial_trace_second(validate_density(np.eye(2)/2))


def test_x_state_examples():
    rho = x_state(XStateParams(0.25, 0.25, 0.25, 0.25))
    np.testing.assert_array_equal(rho.matrix, np.eye(4)/4)

    werner = werner_state(0.3)
    rho = x_state(XStateParams(0.325, 0.175, 0.175, 0.325, c14=0.15))
    np.testing.assert_allclose(rho.matrix, werner.matrix, atol=1e-16)

    bell = XStateParams(0.5, 0, 0, 0.5, c14=0.5)
    np.testing.assert_allclose(
        x_state_eigenvalues(bell), [1.0, 0.0, 0.0, 0.0], atol=1e-16,
    )


def test_x_state_invalid():
    with pytest.raises(InvalidXParams):
        XStateParams(0.5, 0, 0, 0.5, c14=0.6)
    with pytest.raises(InvalidXParams):
        XStateParams(0.25, 0.25, 0.25, 0.25, c23=0.3j)
    with pytest.raises(InvalidXParams):
        XStateParams(0.5, 0.6, 0.0, -0.1)
    with pytest.raises(TraceNotOne):
        XStateParams(0.3, 0.3, 0.3, 0.3)
    with pytest.raises(InvalidXParams):
        x_state([0.25]*4)


def test_x_state_from_matrix():
    params = XStateParams(0.4, 0.1, 0.2, 0.3, c14=0.1 - 0.2j, c23=0.1j)
    again = XStateParams.from_matrix(params.to_matrix())
    np.testing.assert_array_equal(again.diagonal, params.diagonal)
    assert again.c14 == params.c14
    assert again.c23 == params.c23

    m = params.to_matrix()
    m[0, 1] = m[1, 0] = 0.01
    with pytest.raises(InvalidXParams):
        XStateParams.from_matrix(m)


def test_x_state_eigenvalues_match_generic(x_params):
    for params in x_params:
        closed = x_state_eigenvalues(params)
        generic = hermitian_eigen(params.to_matrix()).eigenvalues
        np.testing.assert_allclose(closed, generic, rtol=0, atol=1e-12)


def test_werner_spectrum():
    for p in np.linspace(-1/3, 1, 50):
        evals = werner_state(p).eigenvalues
        expected = np.sort([(1 + 3*p)/4] + [(1 - p)/4]*3)[::-1]
        np.testing.assert_allclose(evals, expected, rtol=0, atol=1e-12)


def test_random_density():
    a = random_density(7, 4)
    b = random_density(7, 4)
    c = random_density(8, 4)
    np.testing.assert_array_equal(a.matrix, b.matrix)
    assert not np.allclose(a.matrix, c.matrix)

    for seed in range(50):
        rho = random_density(seed, 4)
        assert abs(np.trace(rho.matrix) - 1) <= 1e-12
        assert rho.eigenvalues.min() >= 0


def test_random_unitary():
    u = random_unitary(3, 4)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-13)

    rho = random_density(4, 4, dims=Bipartite(2, 2))
    rotated = conjugate(rho, u)
    assert rotated.dims == Bipartite(2, 2)
    np.testing.assert_allclose(
        rotated.eigenvalues, rho.eigenvalues, rtol=0, atol=1e-12,
    )


def test_diagonal_probabilities():
    probs = diagonal_probabilities(werner_state(0.6))
    np.testing.assert_allclose(probs, [0.4, 0.1, 0.1, 0.4], atol=1e-16)
