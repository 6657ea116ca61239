"""
density matrices: validation, relabeling, partial traces, X and Werner
states, and seeded random states
"""
import copy
import logging
from functools import cached_property

import numpy as np
from numpy.random import Generator, default_rng

from .constants import (
    HERMITIAN_TOL,
    TRACE_TOL,
    PSD_TOL,
    WERNER_P_MIN,
    WERNER_P_MAX,
    WERNER_P_SLACK,
    SEPARABLE_BOUNDARY,
)
from .errors import (
    InvalidDensityMatrix,
    NotHermitian,
    TraceNotOne,
    NotPSD,
    DimensionMismatch,
    InvalidXParams,
    ParamOutOfRange,
)
from .labelings import (
    Bipartite,
    Single,
    dims_size,
    get_labeling,
)
from .linalg import (
    as_complex_matrix,
    hermiticity_error,
    hermitian_eigen,
    clamp_eigenvalues,
)

logger = logging.getLogger(__name__)

# slack on the X-state block positivity conditions
X_BLOCK_SLACK = 1.0e-12


class DensityMatrix(object):
    """
    a validated density matrix

    Build these with validate_density or one of the constructors below
    rather than directly; the constructor trusts its input.

    Parameters
    ----------
    matrix: array
        d x d Hermitian, unit trace, PSD complex array
    dims: Bipartite or Single
        How the d indices factorize
    spectrum: SpectralDecomposition, optional
        Eigendecomposition already computed during validation
    """
    def __init__(self, matrix, dims, spectrum=None):
        self.matrix = matrix
        self.matrix.setflags(write=False)
        self.dims = dims
        if spectrum is not None:
            self.spectrum = spectrum

    @property
    def dim(self):
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self):
        return hermitian_eigen(self.matrix)

    @cached_property
    def eigenvalues(self):
        """
        eigenvalues, descending, with rounding noise below zero clamped
        """
        return clamp_eigenvalues(self.spectrum.eigenvalues)

    def with_dims(self, dims):
        """
        same entries, different factorization tag
        """
        if dims_size(dims) != self.dim:
            raise DimensionMismatch(
                'dims %s do not fit a %d x %d matrix' % (
                    dims, self.dim, self.dim,
                )
            )
        new = copy.copy(self)
        new.dims = dims
        return new

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix.copy()
        return self.matrix.astype(dtype)

    def __getitem__(self, indices):
        return self.matrix[indices]

    def __repr__(self):
        return 'DensityMatrix(dims=%s,\n%s)' % (
            self.dims, np.array2string(self.matrix, precision=6),
        )


class WernerState(DensityMatrix):
    """
    the one-parameter Werner family; is_entangled is the p > 1/3 threshold
    """
    def __init__(self, matrix, dims, param, spectrum=None):
        super().__init__(matrix, dims, spectrum=spectrum)
        self.param = param

    @property
    def p(self):
        return self.param.p

    @property
    def is_entangled(self):
        return self.param.is_entangled


def density_violations(m):
    """
    check the density matrix conditions and collect every failure

    Parameters
    ----------
    m: array-like
        Square matrix

    Returns
    -------
    (violations, spectrum) where violations is a list of exception
    instances and spectrum is the SpectralDecomposition, or None when the
    matrix is not Hermitian
    """
    m = as_complex_matrix(m)
    violations = []
    spectrum = None

    herr = hermiticity_error(m)
    if herr > HERMITIAN_TOL:
        violations.append(NotHermitian(
            'max |m - m^dagger| = %g exceeds %g' % (herr, HERMITIAN_TOL)
        ))

    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        violations.append(TraceNotOne(
            'trace is %s, |Tr - 1| = %g exceeds %g' % (
                tr, abs(tr - 1.0), TRACE_TOL,
            )
        ))

    if herr <= HERMITIAN_TOL:
        spectrum = hermitian_eigen(m)
        lowest = spectrum.eigenvalues[-1]
        if lowest < -PSD_TOL:
            violations.append(NotPSD(
                'eigenvalue %g is below -%g' % (lowest, PSD_TOL)
            ))

    return violations, spectrum


def validate_density(m, dims=None):
    """
    check that a matrix is a density matrix: Hermitian, unit trace, PSD

    Parameters
    ----------
    m: array-like
        Square complex matrix
    dims: Bipartite or Single, optional
        Factorization tag, default Single(d)

    Returns
    -------
    DensityMatrix

    Raises
    ------
    NotHermitian, TraceNotOne, NotPSD when exactly one check fails, an
    InvalidDensityMatrix listing all failures when several do
    """
    m = as_complex_matrix(m)
    d = m.shape[0]

    if dims is None:
        dims = Single(d)
    elif dims_size(dims) != d:
        raise DimensionMismatch(
            'dims %s do not fit a %d x %d matrix' % (dims, d, d)
        )

    violations, spectrum = density_violations(m)
    if len(violations) == 1:
        raise violations[0]
    elif violations:
        names = ', '.join(type(v).__name__ for v in violations)
        logger.debug('density matrix rejected: %s', names)
        raise InvalidDensityMatrix(
            'matrix fails %s' % names, violations=violations,
        )

    m = 0.5*(m + m.conj().T)
    return DensityMatrix(m, dims, spectrum=spectrum)


def as_density(rho):
    """
    pass a DensityMatrix through, validate anything else
    """
    if isinstance(rho, DensityMatrix):
        return rho
    return validate_density(rho)


def relabel(rho, from_labeling, to_labeling):
    """
    reinterpret a 4 x 4 state under another index labeling

    Both labelings keep the flat order 1..4, so the entries are unchanged
    and only the dims tag moves between Bipartite(2, 2) and Single(4).

    Parameters
    ----------
    rho: DensityMatrix
        State whose dims match from_labeling
    from_labeling, to_labeling: IndexLabeling or str
        'two-qubit' or 'spin32'

    Returns
    -------
    DensityMatrix of the same class as rho; a WernerState keeps its p
    """
    rho = as_density(rho)
    from_labeling = get_labeling(from_labeling)
    to_labeling = get_labeling(to_labeling)

    if from_labeling.dim != 4 or to_labeling.dim != 4:
        raise DimensionMismatch('relabeling needs 4-dimensional labelings')
    if rho.dim != from_labeling.dim:
        raise DimensionMismatch(
            'state has dimension %d, labeling %s has %d' % (
                rho.dim, from_labeling.kind, from_labeling.dim,
            )
        )
    if rho.dims != from_labeling.dims:
        raise DimensionMismatch(
            'state dims %s do not match labeling %s' % (
                rho.dims, from_labeling.kind,
            )
        )

    return rho.with_dims(to_labeling.dims)


def partial_trace_second(rho):
    """
    reduced state of the first subsystem, Tr_2 rho

    For a 4 x 4 state this is [[r11+r22, r13+r24], [r31+r42, r33+r44]].  A
    Single(4) state, the spin-3/2 qudit, is read through the two-qubit index
    map first.

    Parameters
    ----------
    rho: DensityMatrix
        Bipartite state, or a Single(4) state

    Returns
    -------
    DensityMatrix of dimension dim_a
    """
    rho = as_density(rho)
    dims = _bipartite_dims(rho)
    blocks = rho.matrix.reshape(dims.dim_a, dims.dim_b, dims.dim_a, dims.dim_b)
    return validate_density(np.trace(blocks, axis1=1, axis2=3))


def partial_trace_first(rho):
    """
    reduced state of the second subsystem, Tr_1 rho

    For a 4 x 4 state this is [[r11+r33, r12+r34], [r21+r43, r22+r44]].

    Parameters
    ----------
    rho: DensityMatrix
        Bipartite state, or a Single(4) state

    Returns
    -------
    DensityMatrix of dimension dim_b
    """
    rho = as_density(rho)
    dims = _bipartite_dims(rho)
    blocks = rho.matrix.reshape(dims.dim_a, dims.dim_b, dims.dim_a, dims.dim_b)
    return validate_density(np.trace(blocks, axis1=0, axis2=2))


def reductions(rho):
    """
    (rho_1, rho_2), the reduced states of the first and second subsystem
    """
    return partial_trace_second(rho), partial_trace_first(rho)


def _bipartite_dims(rho):
    if isinstance(rho.dims, Bipartite):
        return rho.dims
    if rho.dim == 4:
        return Bipartite(2, 2)

    raise DimensionMismatch(
        'partial traces need a bipartite or 4-dimensional state, got %s' % (
            rho.dims,
        )
    )


def product_state(rho_a, rho_b):
    """
    the tensor product rho_a (x) rho_b, tagged Bipartite(d_a, d_b)
    """
    rho_a = as_density(rho_a)
    rho_b = as_density(rho_b)
    return validate_density(
        np.kron(rho_a.matrix, rho_b.matrix),
        dims=Bipartite(rho_a.dim, rho_b.dim),
    )


def diagonal_probabilities(rho):
    """
    the probability vector built from the diagonal of rho
    """
    rho = as_density(rho)
    probs = rho.matrix.diagonal().real.copy()
    probs[(probs < 0) & (probs >= -PSD_TOL)] = 0.0
    return probs


class XStateParams(object):
    """
    the six numbers of an X-state: diagonal d1..d4 and the two coherences
    c14 = rho_14, c23 = rho_23

    Parameters
    ----------
    d1, d2, d3, d4: float
        Nonnegative populations summing to one
    c14, c23: complex, optional
        Coherences, default zero.  Positivity needs d1 d4 >= |c14|^2 and
        d2 d3 >= |c23|^2.
    """
    def __init__(self, d1, d2, d3, d4, c14=0.0, c23=0.0):
        self.diagonal = np.array([d1, d2, d3, d4], dtype='f8')
        self.c14 = complex(c14)
        self.c23 = complex(c23)

        if not (np.all(np.isfinite(self.diagonal))
                and np.isfinite(self.c14) and np.isfinite(self.c23)):
            raise InvalidXParams('X-state parameters must be finite')

        if self.diagonal.min() < -X_BLOCK_SLACK:
            raise InvalidXParams(
                'populations must be nonnegative, got %s' % (self.diagonal, )
            )

        total = self.diagonal.sum()
        if abs(total - 1.0) > TRACE_TOL:
            raise TraceNotOne(
                'populations sum to %.17g, not 1' % total
            )

        d1, d2, d3, d4 = self.diagonal
        if d1*d4 < abs(self.c14)**2 - X_BLOCK_SLACK:
            raise InvalidXParams(
                'outer block not positive: d1 d4 = %g < |c14|^2 = %g' % (
                    d1*d4, abs(self.c14)**2,
                )
            )
        if d2*d3 < abs(self.c23)**2 - X_BLOCK_SLACK:
            raise InvalidXParams(
                'inner block not positive: d2 d3 = %g < |c23|^2 = %g' % (
                    d2*d3, abs(self.c23)**2,
                )
            )

    @classmethod
    def werner(cls, p):
        """
        the Werner state as an X-state
        """
        p = WernerParam(p).p
        return cls(
            (1 + p)/4, (1 - p)/4, (1 - p)/4, (1 + p)/4,
            c14=p/2,
        )

    @classmethod
    def from_matrix(cls, m):
        """
        read the parameters off a 4 x 4 matrix with the X sparsity pattern

        Entries outside the diagonal and anti-diagonal must vanish to within
        1e-12; the lower anti-diagonal must be the conjugate of the upper.
        """
        m = as_complex_matrix(m)
        if m.shape != (4, 4):
            raise DimensionMismatch('X-states are 4 x 4, got %s' % (m.shape, ))

        pattern = np.eye(4, dtype=bool) | np.eye(4, dtype=bool)[::-1]
        outside = np.abs(m[~pattern])
        if outside.size and outside.max() > HERMITIAN_TOL:
            raise InvalidXParams(
                'entry of size %g outside the X pattern' % outside.max()
            )
        if hermiticity_error(m) > HERMITIAN_TOL:
            raise InvalidXParams('X-state matrix is not Hermitian')

        diag = m.diagonal().real
        return cls(*diag, c14=m[0, 3], c23=m[1, 2])

    def to_matrix(self):
        d1, d2, d3, d4 = self.diagonal
        m = np.diag(self.diagonal).astype('c16')
        m[0, 3] = self.c14
        m[3, 0] = self.c14.conjugate()
        m[1, 2] = self.c23
        m[2, 1] = self.c23.conjugate()
        return m

    def __repr__(self):
        return 'XStateParams(d=%s, c14=%s, c23=%s)' % (
            list(self.diagonal), self.c14, self.c23,
        )


def x_state(params, dims=None):
    """
    assemble the X-state density matrix

    Parameters
    ----------
    params: XStateParams
        The six parameters
    dims: Bipartite or Single, optional
        Default Single(4), the spin-3/2 reading

    Returns
    -------
    DensityMatrix
    """
    if not isinstance(params, XStateParams):
        raise InvalidXParams('expected XStateParams, got %r' % (params, ))

    return validate_density(params.to_matrix(), dims=dims)


def x_state_eigenvalues(params):
    """
    closed-form spectrum of an X-state from its two 2 x 2 blocks

    (d1+d4)/2 +- sqrt(((d1-d4)/2)^2 + |c14|^2) and
    (d2+d3)/2 +- sqrt(((d2-d3)/2)^2 + |c23|^2), sorted descending

    Parameters
    ----------
    params: XStateParams

    Returns
    -------
    array of 4 reals
    """
    d1, d2, d3, d4 = params.diagonal
    outer = np.hypot((d1 - d4)/2, abs(params.c14))
    inner = np.hypot((d2 - d3)/2, abs(params.c23))

    evals = np.array([
        (d1 + d4)/2 + outer,
        (d1 + d4)/2 - outer,
        (d2 + d3)/2 + inner,
        (d2 + d3)/2 - inner,
    ])
    return np.sort(evals, kind='stable')[::-1]


class WernerParam(object):
    """
    the Werner mixing parameter, -1/3 <= p <= 1

    Parameters
    ----------
    p: float or WernerParam
    """
    def __init__(self, p):
        if isinstance(p, WernerParam):
            p = p.p
        p = float(p)

        if (not np.isfinite(p)
                or p < WERNER_P_MIN - WERNER_P_SLACK
                or p > WERNER_P_MAX + WERNER_P_SLACK):
            raise ParamOutOfRange(
                'Werner parameter must satisfy -1/3 <= p <= 1, got %g' % p
            )
        self.p = p

    @property
    def is_entangled(self):
        return self.p > SEPARABLE_BOUNDARY

    def __float__(self):
        return self.p

    def __repr__(self):
        return 'WernerParam(%r)' % self.p


def werner_state(p, dims=None):
    """
    the Werner state

        (1+p)/4    0        0        p/2
        0          (1-p)/4  0        0
        0          0        (1-p)/4  0
        p/2        0        0        (1+p)/4

    Parameters
    ----------
    p: float or WernerParam
        -1/3 <= p <= 1; the state is entangled for p > 1/3
    dims: Bipartite or Single, optional
        Default Single(4)

    Returns
    -------
    WernerState
    """
    param = WernerParam(p)
    rho = x_state(XStateParams.werner(param), dims=dims)
    return WernerState(rho.matrix, rho.dims, param, spectrum=rho.spectrum)


def get_generator(seed):
    """
    numpy Generator for a seed; a Generator is passed through
    """
    if isinstance(seed, Generator):
        return seed
    return default_rng(seed)


def random_density(seed, d, dims=None):
    """
    random density matrix from the Ginibre (Hilbert-Schmidt) ensemble

    rho = G G^dagger / Tr(G G^dagger) with G a d x d matrix of independent
    standard complex normal entries

    Parameters
    ----------
    seed: int or numpy Generator
        Same seed, same matrix
    d: int
        Dimension
    dims: Bipartite or Single, optional
        Default Single(d)

    Returns
    -------
    DensityMatrix
    """
    if d < 1:
        raise DimensionMismatch('dimension must be >= 1, got %d' % d)

    rng = get_generator(seed)
    g = _ginibre(rng, d)
    m = g @ g.conj().T
    m = m/np.trace(m).real
    return validate_density(0.5*(m + m.conj().T), dims=dims)


def random_unitary(seed, d):
    """
    Haar-random unitary from the QR decomposition of a Ginibre matrix
    """
    rng = get_generator(seed)
    qmat, rmat = np.linalg.qr(_ginibre(rng, d))
    phases = rmat.diagonal()/np.abs(rmat.diagonal())
    return qmat * phases


def conjugate(rho, u):
    """
    the state u rho u^dagger
    """
    rho = as_density(rho)
    m = u @ rho.matrix @ u.conj().T
    return validate_density(0.5*(m + m.conj().T), dims=rho.dims)


def random_x_params(seed):
    """
    random valid X-state parameters

    The populations are Dirichlet(1, 1, 1, 1); each coherence has a uniform
    phase and a modulus uniform in [0, sqrt(product of its populations)].
    """
    rng = get_generator(seed)
    d1, d2, d3, d4 = rng.dirichlet(np.ones(4))
    r14, r23 = rng.uniform(size=2)
    phi14, phi23 = rng.uniform(0, 2*np.pi, size=2)

    c14 = r14*np.sqrt(d1*d4)*np.exp(1j*phi14)
    c23 = r23*np.sqrt(d2*d3)*np.exp(1j*phi23)

    # renormalize away the last bit of rounding in the Dirichlet draw
    total = d1 + d2 + d3 + d4
    return XStateParams(
        d1/total, d2/total, d3/total, d4/total,
        c14=c14/total, c23=c23/total,
    )


def _ginibre(rng, d):
    return (
        rng.standard_normal((d, d)) + 1j*rng.standard_normal((d, d))
    )/np.sqrt(2)
