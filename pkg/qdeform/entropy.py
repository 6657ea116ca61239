"""
classical and quantum Tsallis, Renyi and von Neumann entropies, in nats

Quantum entropies are evaluated on the clamped spectrum of the density
matrix, never through dense matrix logarithms; q_log in qdeform.linalg gives
the same numbers by spectral calculus.
"""
import enum

import numpy as np

from .constants import PSD_TOL, Q_BRANCH_TOL, TRACE_TOL
from .errors import (
    InvalidDeformation,
    KindMismatch,
    DomainError,
    DimensionMismatch,
)
from .linalg import clamp_eigenvalues
from .states import as_density, diagonal_probabilities


class EntropyKind(enum.Enum):
    TSALLIS = 'tsallis'
    RENYI = 'renyi'
    VON_NEUMANN = 'von-neumann'


class DeformationParam(object):
    """
    the deformation parameter q, a finite real > 0

    Parameters
    ----------
    q: float or DeformationParam
    """
    def __init__(self, q):
        if isinstance(q, DeformationParam):
            q = q.q
        q = float(q)
        if not np.isfinite(q) or q <= 0:
            raise InvalidDeformation('q must be a finite real > 0, got %g' % q)
        self.q = q

    @property
    def is_von_neumann(self):
        """
        True when q is close enough to 1 to use the logarithmic branch
        """
        return abs(self.q - 1.0) <= Q_BRANCH_TOL

    def __float__(self):
        return self.q

    def __eq__(self, other):
        if isinstance(other, DeformationParam):
            return self.q == other.q
        return NotImplemented

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return 'DeformationParam(%r)' % self.q


class ProbabilityVector(object):
    """
    nonnegative reals summing to one within a tolerance

    Parameters
    ----------
    probs: array-like
        The probabilities
    tol: float, optional
        Allowed distance of the sum from one, default 1e-12
    """
    def __init__(self, probs, tol=TRACE_TOL):
        if isinstance(probs, ProbabilityVector):
            self.probs = probs.probs
            return

        probs = np.array(probs, dtype='f8', ndmin=1)

        if probs.ndim != 1 or probs.size == 0:
            raise ValueError(
                'probabilities must be a non-empty 1-d sequence, got shape %s'
                % (probs.shape, )
            )
        if not np.all(np.isfinite(probs)):
            raise ValueError('probabilities must be finite')
        if probs.min() < 0:
            raise ValueError(
                'probabilities must be nonnegative, got %g' % probs.min()
            )
        total = probs.sum()
        if abs(total - 1.0) > tol:
            raise ValueError('probabilities sum to %.17g, not 1' % total)

        self.probs = probs

    @classmethod
    def from_clamped(cls, values):
        """
        probabilities from a spectrum or diagonal of a validated state

        Entries in [-1e-10, 0) are set to zero, and the sum may then be
        off from one by up to 1e-10 per entry on top of the trace
        tolerance.
        """
        probs = clamp_eigenvalues(np.array(values, dtype='f8', ndmin=1))
        return cls(probs, tol=TRACE_TOL + probs.size*PSD_TOL)

    def __len__(self):
        return self.probs.size

    def __repr__(self):
        return 'ProbabilityVector(%s)' % list(self.probs)


class EntropyValue(object):
    """
    an entropy in nats, tagged with its kind and deformation parameter

    Parameters
    ----------
    value: float
    kind: EntropyKind
    q: DeformationParam, optional
        None for von Neumann entropies
    """
    def __init__(self, value, kind, q=None):
        self.value = float(value)
        self.kind = EntropyKind(kind)
        self.q = None if q is None else DeformationParam(q)

    def __float__(self):
        return self.value

    def __repr__(self):
        if self.q is None:
            return 'EntropyValue(%r, %s)' % (self.value, self.kind.value)
        return 'EntropyValue(%r, %s, q=%r)' % (
            self.value, self.kind.value, self.q.q,
        )


def as_deformation(q):
    if isinstance(q, DeformationParam):
        return q
    return DeformationParam(q)


def classical_tsallis(p, q):
    """
    Tsallis entropy (sum p_i^q - 1)/(1 - q) of a probability vector; the
    Shannon entropy when |q - 1| <= 1e-12

    Parameters
    ----------
    p: ProbabilityVector or array-like
    q: float or DeformationParam

    Returns
    -------
    EntropyValue
    """
    probs = ProbabilityVector(p).probs
    q = as_deformation(q)

    if q.is_von_neumann:
        value = _shannon(probs)
    else:
        value = _power_sum_minus_one(probs, q.q)/(1.0 - q.q)

    return EntropyValue(value, EntropyKind.TSALLIS, q)


def classical_renyi(p, q):
    """
    Renyi entropy ln(sum p_i^q)/(1 - q) of a probability vector; the
    Shannon entropy when |q - 1| <= 1e-12

    Parameters
    ----------
    p: ProbabilityVector or array-like
    q: float or DeformationParam

    Returns
    -------
    EntropyValue
    """
    probs = ProbabilityVector(p).probs
    q = as_deformation(q)

    if q.is_von_neumann:
        value = _shannon(probs)
    else:
        value = np.log1p(_power_sum_minus_one(probs, q.q))/(1.0 - q.q)

    return EntropyValue(value, EntropyKind.RENYI, q)


def quantum_tsallis(rho, q):
    """
    Tsallis entropy -Tr rho ln_q rho of a density matrix, from its spectrum

    Parameters
    ----------
    rho: DensityMatrix or array-like
    q: float or DeformationParam

    Returns
    -------
    EntropyValue
    """
    return classical_tsallis(_spectrum(rho), q)


def quantum_renyi(rho, q):
    """
    Renyi entropy ln(Tr rho^q)/(1 - q) of a density matrix, from its
    spectrum

    Parameters
    ----------
    rho: DensityMatrix or array-like
    q: float or DeformationParam

    Returns
    -------
    EntropyValue
    """
    return classical_renyi(_spectrum(rho), q)


def von_neumann(rho):
    """
    von Neumann entropy -Tr rho ln rho, with 0 ln 0 = 0
    """
    probs = _spectrum(rho).probs
    return EntropyValue(_shannon(probs), EntropyKind.VON_NEUMANN)


def power_trace(rho, q):
    """
    Tr rho^q from the clamped spectrum, with 0^q = 0
    """
    q = as_deformation(q)
    evals = _spectrum(rho).probs
    evals = evals[evals > 0]
    return float(np.sum(evals**q.q))


def tsallis_from_renyi(sr, q=None):
    """
    convert a Renyi entropy to the Tsallis entropy with the same q

        S^T = (exp(S^R (1 - q)) - 1)/(1 - q)

    Parameters
    ----------
    sr: EntropyValue
        A Renyi entropy
    q: float or DeformationParam, optional
        Must equal sr.q when given

    Returns
    -------
    EntropyValue
    """
    q = _conversion_q(sr, EntropyKind.RENYI, q)

    if q.is_von_neumann:
        value = sr.value
    else:
        value = np.expm1(sr.value*(1.0 - q.q))/(1.0 - q.q)

    return EntropyValue(value, EntropyKind.TSALLIS, q)


def renyi_from_tsallis(st, q=None):
    """
    convert a Tsallis entropy to the Renyi entropy with the same q

        S^R = ln(1 + (1 - q) S^T)/(1 - q)

    Parameters
    ----------
    st: EntropyValue
        A Tsallis entropy
    q: float or DeformationParam, optional
        Must equal st.q when given

    Returns
    -------
    EntropyValue

    Raises
    ------
    DomainError when 1 + (1 - q) S^T <= 0
    """
    q = _conversion_q(st, EntropyKind.TSALLIS, q)

    if q.is_von_neumann:
        value = st.value
    else:
        shifted = (1.0 - q.q)*st.value
        if 1.0 + shifted <= 0:
            raise DomainError(
                'ln(1 + (1-q) S^T) undefined: 1 + (1-q) S^T = %g' % (
                    1.0 + shifted,
                )
            )
        value = np.log1p(shifted)/(1.0 - q.q)

    return EntropyValue(value, EntropyKind.RENYI, q)


def max_tsallis(d, q):
    """
    Tsallis entropy of the maximally mixed state in dimension d,
    (d^(1-q) - 1)/(1 - q)
    """
    q = as_deformation(q)
    if q.is_von_neumann:
        return float(np.log(d))
    return float(np.expm1((1.0 - q.q)*np.log(d))/(1.0 - q.q))


def max_renyi(d):
    """
    Renyi entropy of the maximally mixed state, ln d for every q
    """
    return float(np.log(d))


def classical_q_information(rho, q):
    """
    Tsallis q-information of the diagonal distribution of a 4 x 4 state:
    the classical entropies of the two marginals minus that of the joint
    distribution (r11, r22, r33, r44)

    Parameters
    ----------
    rho: DensityMatrix or array-like
        4 x 4 state
    q: float or DeformationParam

    Returns
    -------
    float
    """
    probs = ProbabilityVector.from_clamped(diagonal_probabilities(rho)).probs
    if probs.size != 4:
        raise DimensionMismatch(
            'classical q-information needs a 4 x 4 state, got d=%d'
            % probs.size
        )

    p1, p2, p3, p4 = probs
    first = classical_tsallis([p1 + p2, p3 + p4], q).value
    second = classical_tsallis([p1 + p3, p2 + p4], q).value
    joint = classical_tsallis(probs, q).value
    return first + second - joint


def _spectrum(rho):
    return ProbabilityVector.from_clamped(as_density(rho).eigenvalues)


def _shannon(probs):
    pos = probs[probs > 0]
    return float(-np.sum(pos*np.log(pos)))


def _power_sum_minus_one(probs, q):
    """
    sum p_i^q - 1, written as sum p_i (p_i^(q-1) - 1) so that it stays
    accurate as q approaches 1
    """
    pos = probs[probs > 0]
    return float(np.sum(pos*np.expm1((q - 1.0)*np.log(pos))))


def _conversion_q(entropy, kind, q):
    if not isinstance(entropy, EntropyValue) or entropy.kind != kind:
        raise KindMismatch(
            'expected a %s entropy, got %r' % (kind.value, entropy)
        )
    if q is None:
        q = entropy.q
    else:
        q = as_deformation(q)
        if entropy.q is not None and q != entropy.q:
            raise KindMismatch(
                'entropy has q=%g, conversion asked for q=%g' % (
                    entropy.q.q, q.q,
                )
            )
    if q is None:
        raise KindMismatch('entropy carries no deformation parameter')
    return q

