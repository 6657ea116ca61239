"""
small dense Hermitian kernel: cyclic Jacobi eigensolver and the spectral
matrix functions the entropies are built from

Matrices are complex128 numpy arrays.  Everything here is a pure function of
its input.
"""
import logging

import numpy as np

from .configuration import config
from .constants import (
    HERMITIAN_TOL,
    PSD_TOL,
    Q_BRANCH_TOL,
    OFFDIAG_TOL,
)
from .errors import (
    NoConvergence,
    NotHermitian,
    NotPSD,
    SingularLog,
    DimensionMismatch,
    InvalidDeformation,
)

logger = logging.getLogger(__name__)


class SpectralDecomposition(object):
    """
    eigenvalues and orthonormal eigenvectors of a Hermitian matrix

    Parameters
    ----------
    eigenvalues: array
        d real eigenvalues, sorted descending
    eigenvectors: array
        d x d complex array, column i belongs to eigenvalues[i]
    """
    def __init__(self, eigenvalues, eigenvectors):
        self.eigenvalues = np.asarray(eigenvalues, dtype='f8')
        self.eigenvectors = np.asarray(eigenvectors, dtype='c16')

    @property
    def dim(self):
        return self.eigenvalues.size

    def apply(self, values):
        """
        build V diag(values) V^dagger

        Parameters
        ----------
        values: array
            One value per eigenvalue, usually f(eigenvalues)

        Returns
        -------
        Hermitian complex array
        """
        v = self.eigenvectors
        m = (v * np.asarray(values)) @ v.conj().T
        return 0.5*(m + m.conj().T)

    def reconstruct(self):
        return self.apply(self.eigenvalues)

    def __repr__(self):
        return 'SpectralDecomposition(eigenvalues=%s)' % (
            np.array2string(self.eigenvalues, precision=6),
        )


def as_complex_matrix(m):
    """
    convert the input to a square, finite complex128 array

    Parameters
    ----------
    m: array-like
        Anything numpy can turn into a 2-d array, including a DensityMatrix

    Returns
    -------
    a new complex array
    """
    arr = np.array(m, dtype='c16', ndmin=2)

    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(
            'matrix must be square, got shape %s' % (arr.shape, )
        )
    if arr.shape[0] == 0:
        raise DimensionMismatch('matrix must have at least one row')

    if not np.all(np.isfinite(arr)):
        raise ValueError('matrix has NaN or Inf entries')

    return arr


def hermiticity_error(m):
    """
    largest entrywise |m[i, j] - conj(m[j, i])|
    """
    m = np.asarray(m)
    return np.abs(m - m.conj().T).max()


def trace(m):
    """
    sum of the diagonal entries, as a complex number
    """
    return complex(np.trace(as_complex_matrix(m)))


def hermitian_eigen(m, max_sweeps=None):
    """
    eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations

    Parameters
    ----------
    m: array-like
        Square matrix, Hermitian to within 1e-12 entrywise
    max_sweeps: int, optional
        Sweep budget, default config['max_sweeps']

    Returns
    -------
    SpectralDecomposition with eigenvalues sorted descending; ties keep
    their original diagonal order
    """
    a = as_complex_matrix(m)

    herr = hermiticity_error(a)
    if herr > HERMITIAN_TOL:
        raise NotHermitian(
            'matrix is not Hermitian: max |m - m^dagger| = %g' % herr
        )

    if max_sweeps is None:
        max_sweeps = config['max_sweeps']

    a = 0.5*(a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype='c16')

    # absolute for density matrices, relative for anything larger
    threshold = OFFDIAG_TOL * max(1.0, np.linalg.norm(a))

    nsweeps = 0
    while _offdiag_norm(a) >= threshold:
        if nsweeps == max_sweeps:
            raise NoConvergence(
                'off-diagonal norm %g after %d sweeps' % (
                    _offdiag_norm(a), nsweeps,
                )
            )

        for p in range(n-1):
            for q in range(p+1, n):
                _rotate(a, v, p, q)

        nsweeps += 1

    logger.debug('jacobi converged in %d sweeps for d=%d', nsweeps, n)

    evals = a.diagonal().real.copy()
    order = np.argsort(-evals, kind='stable')

    return SpectralDecomposition(evals[order], v[:, order])


def clamp_eigenvalues(eigenvalues, tol=PSD_TOL):
    """
    map eigenvalues in [-tol, 0) to zero

    Parameters
    ----------
    eigenvalues: array
        Real eigenvalues
    tol: float, optional
        Largest negative magnitude treated as rounding noise

    Returns
    -------
    new array of nonnegative eigenvalues
    """
    eigenvalues = np.asarray(eigenvalues, dtype='f8')
    if eigenvalues.size > 0 and eigenvalues.min() < -tol:
        raise NotPSD(
            'matrix has eigenvalue %g below -%g' % (eigenvalues.min(), tol)
        )
    return np.where(eigenvalues < 0, 0.0, eigenvalues)


def matrix_power(m, q):
    """
    m^q for a positive semidefinite Hermitian matrix, with 0^q = 0

    Parameters
    ----------
    m: array-like
        PSD Hermitian matrix
    q: float
        Positive exponent

    Returns
    -------
    Hermitian complex array
    """
    q = _check_exponent(q)

    decomp = hermitian_eigen(m)
    evals = clamp_eigenvalues(decomp.eigenvalues)

    powered = np.zeros_like(evals)
    pos = evals > 0
    powered[pos] = evals[pos]**q

    return decomp.apply(powered)


def q_log(m, q):
    """
    the deformed logarithm ln_q(m) = (m^(q-1) - I)/(q - 1), the matrix
    logarithm when |q - 1| <= 1e-12

    For q <= 1 the matrix must be strictly positive definite; for q > 1 a
    zero eigenvalue maps to -1/(q - 1).

    Parameters
    ----------
    m: array-like
        PSD Hermitian matrix
    q: float
        Deformation parameter, > 0

    Returns
    -------
    Hermitian complex array
    """
    q = _check_exponent(q)

    decomp = hermitian_eigen(m)
    evals = clamp_eigenvalues(decomp.eigenvalues)
    pos = evals > 0

    if q <= 1.0 + Q_BRANCH_TOL and not np.all(pos):
        raise SingularLog(
            'q-log with q=%g needs a positive definite matrix, '
            'smallest eigenvalue is %g' % (q, evals.min())
        )

    if abs(q - 1.0) <= Q_BRANCH_TOL:
        values = np.log(evals)
    else:
        values = np.full(evals.size, -1.0/(q - 1.0))
        values[pos] = np.expm1((q - 1.0)*np.log(evals[pos]))/(q - 1.0)

    return decomp.apply(values)


def _check_exponent(q):
    q = float(q)
    if not np.isfinite(q) or q <= 0:
        raise InvalidDeformation('q must be a finite real > 0, got %g' % q)
    return q


def _offdiag_norm(a):
    off = a - np.diag(a.diagonal())
    return np.linalg.norm(off)


def _rotate(a, v, p, q):
    """
    one complex Jacobi rotation zeroing a[p, q], applied in place to a and
    accumulated into v
    """
    apq = a[p, q]
    mag = abs(apq)
    if mag == 0.0:
        return

    phase = apq/mag
    app = a[p, p].real
    aqq = a[q, q].real

    theta = (aqq - app)/(2.0*mag)
    t = 1.0/(abs(theta) + np.hypot(theta, 1.0))
    if theta < 0:
        t = -t
    c = 1.0/np.sqrt(t*t + 1.0)
    s = t*c

    # phase rotation diag(1, conj(phase)) followed by a real rotation
    jrot = np.array([
        [c, s],
        [-s*phase.conjugate(), c*phase.conjugate()],
    ])

    idx = [p, q]
    a[:, idx] = a[:, idx] @ jrot
    a[idx, :] = jrot.conj().T @ a[idx, :]
    v[:, idx] = v[:, idx] @ jrot

    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
