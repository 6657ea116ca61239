"""
q-information, the Tsallis subadditivity check, the Renyi-form inequality,
the closed-form X-state q-information and the Werner sweep
"""
import logging
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .configuration import config
from .constants import SEPARABLE_BOUNDARY
from .entropy import (
    ProbabilityVector,
    as_deformation,
    classical_tsallis,
    quantum_tsallis,
    von_neumann,
    power_trace,
)
from .errors import DimensionMismatch, InvalidXParams
from .states import (
    as_density,
    reductions,
    werner_state,
    x_state_eigenvalues,
    XStateParams,
    WernerParam,
)
from .labelings import Bipartite, Single

logger = logging.getLogger(__name__)

InformationTerms = namedtuple(
    'InformationTerms', ['i_q', 's_joint', 's_first', 's_second'],
)

SweepRow = namedtuple(
    'SweepRow', ['p', 'q', 'i_q', 's_joint', 's_first', 's_second'],
)


class InequalityReport(object):
    """
    verdict of one entropic inequality check

    Parameters
    ----------
    name: str
        Which inequality, 'subadditivity' or 'renyi'
    lhs, rhs: float
        The two sides
    margin: float
        Distance on the satisfied side, negative when violated
    q: DeformationParam
    tolerance: float
        satisfied is margin >= -tolerance
    guaranteed: bool
        Whether q lies where the inequality is a theorem (q > 1)
    """
    def __init__(self, name, lhs, rhs, margin, q, tolerance, guaranteed):
        self.name = name
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.margin = float(margin)
        self.q = as_deformation(q)
        self.tolerance = float(tolerance)
        self.guaranteed = bool(guaranteed)

    @property
    def satisfied(self):
        return self.margin >= -self.tolerance

    @property
    def saturated(self):
        return abs(self.margin) <= self.tolerance

    @property
    def verdict(self):
        if not self.satisfied:
            return 'violated'
        elif self.saturated:
            return 'saturated'
        return 'satisfied'

    def __repr__(self):
        return (
            'InequalityReport(%s, lhs=%.17g, rhs=%.17g, margin=%.17g, '
            'q=%r, %s%s)' % (
                self.name, self.lhs, self.rhs, self.margin, self.q.q,
                self.verdict,
                '' if self.guaranteed else ', not guaranteed',
            )
        )


def information_terms(rho, q):
    """
    the Tsallis entropies entering the q-information

    Parameters
    ----------
    rho: DensityMatrix or array-like
        Bipartite state, or a 4 x 4 single qudit state read through the
        two-qubit index map
    q: float or DeformationParam

    Returns
    -------
    InformationTerms(i_q, s_joint, s_first, s_second)
    """
    rho = _bipartite_state(rho)
    q = as_deformation(q)
    rho1, rho2 = reductions(rho)

    s_joint = quantum_tsallis(rho, q).value
    s_first = quantum_tsallis(rho1, q).value
    s_second = quantum_tsallis(rho2, q).value

    return InformationTerms(
        s_first + s_second - s_joint, s_joint, s_first, s_second,
    )


def q_information(rho, q):
    """
    I_q = S_q(rho_1) + S_q(rho_2) - S_q(rho) with Tsallis entropies

    Parameters
    ----------
    rho: DensityMatrix or array-like
        Bipartite or 4 x 4 state
    q: float or DeformationParam

    Returns
    -------
    float
    """
    return information_terms(rho, q).i_q


def mutual_information(rho):
    """
    von Neumann mutual information S(rho_1) + S(rho_2) - S(rho), the q -> 1
    limit of the q-information
    """
    rho = _bipartite_state(rho)
    rho1, rho2 = reductions(rho)
    return (
        von_neumann(rho1).value + von_neumann(rho2).value
        - von_neumann(rho).value
    )


def check_subadditivity(rho, q, tol=None):
    """
    check S_q(rho) <= S_q(rho_1) + S_q(rho_2), i.e. I_q >= 0

    The inequality is a theorem for q > 1; for q <= 1 the margin is still
    computed but the report is marked not guaranteed.

    Parameters
    ----------
    rho: DensityMatrix or array-like
    q: float or DeformationParam
    tol: float, optional
        Default config['tol']

    Returns
    -------
    InequalityReport with margin = I_q
    """
    q = as_deformation(q)
    tol = config['tol'] if tol is None else tol

    terms = information_terms(rho, q)
    report = InequalityReport(
        'subadditivity',
        lhs=terms.s_joint,
        rhs=terms.s_first + terms.s_second,
        margin=terms.i_q,
        q=q,
        tolerance=tol,
        guaranteed=q.q > 1,
    )
    _log_report(report)
    return report


def check_renyi_inequality(rho, q, tol=None):
    """
    check Tr rho_1^q + Tr rho_2^q - Tr rho^q <= 1

    The left side equals exp(S^R(rho_1)(1-q)) + exp(S^R(rho_2)(1-q))
    - exp(S^R(rho)(1-q)).  Pure product states reach 1 exactly, which the
    report flags as saturated.

    Parameters
    ----------
    rho: DensityMatrix or array-like
    q: float or DeformationParam
    tol: float, optional
        Default config['tol']

    Returns
    -------
    InequalityReport with margin = 1 - lhs
    """
    rho = _bipartite_state(rho)
    q = as_deformation(q)
    tol = config['tol'] if tol is None else tol

    rho1, rho2 = reductions(rho)
    lhs = power_trace(rho1, q) + power_trace(rho2, q) - power_trace(rho, q)

    report = InequalityReport(
        'renyi',
        lhs=lhs,
        rhs=1.0,
        margin=1.0 - lhs,
        q=q,
        tolerance=tol,
        guaranteed=q.q > 1,
    )
    _log_report(report)
    return report


def x_state_q_information(params, q):
    """
    closed-form q-information of an X-state

    The marginal terms are the classical Tsallis entropies of
    (d1+d2, d3+d4) and (d1+d3, d2+d4); the joint term is the Tsallis
    entropy of the four block eigenvalues, Tr (rho^X)^q - 1 over 1 - q.

    Parameters
    ----------
    params: XStateParams
    q: float or DeformationParam

    Returns
    -------
    float
    """
    if not isinstance(params, XStateParams):
        raise InvalidXParams('expected XStateParams, got %r' % (params, ))
    q = as_deformation(q)

    d1, d2, d3, d4 = params.diagonal
    first = classical_tsallis(
        ProbabilityVector.from_clamped([d1 + d2, d3 + d4]), q,
    ).value
    second = classical_tsallis(
        ProbabilityVector.from_clamped([d1 + d3, d2 + d4]), q,
    ).value

    evals = ProbabilityVector.from_clamped(x_state_eigenvalues(params))
    joint = classical_tsallis(evals, q).value

    return first + second - joint


class SweepResult(object):
    """
    rows of the Werner q-information sweep, ordered by (q, p)

    Parameters
    ----------
    rows: sequence of SweepRow
    boundary_p: float, optional
        Border between separable and entangled Werner states, 1/3
    """
    def __init__(self, rows, boundary_p=SEPARABLE_BOUNDARY):
        self.rows = sorted(
            (SweepRow(*(float(v) for v in row)) for row in rows),
            key=lambda row: (row.q, row.p),
        )
        self.boundary_p = boundary_p

        if any(np.isnan(row).any() for row in self.rows):
            raise ValueError('sweep rows contain NaN')

    @property
    def q_values(self):
        """
        distinct q values, ascending
        """
        return sorted(set(row.q for row in self.rows))

    def for_q(self, q):
        """
        arrays (p, i_q) of the rows with this q
        """
        rows = [row for row in self.rows if row.q == q]
        return (
            np.array([row.p for row in rows]),
            np.array([row.i_q for row in rows]),
        )

    def to_array(self):
        """
        n x 6 float array, columns as in SweepRow
        """
        if not self.rows:
            return np.zeros((0, len(SweepRow._fields)))
        return np.array(self.rows, dtype='f8')

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return 'SweepResult(%d rows, q=%s)' % (len(self), self.q_values)


def werner_q_information_curve(p_grid, q_list, workers=None):
    """
    q-information of the Werner state over a grid of p for several q

    Parameters
    ----------
    p_grid: sequence of float
        Values in [-1/3, 1]
    q_list: sequence of float or DeformationParam
        Values > 0
    workers: int, optional
        Threads evaluating the grid, default config['workers'].  The result
        does not depend on it.

    Returns
    -------
    SweepResult
    """
    params = [WernerParam(p) for p in p_grid]
    qs = sorted(as_deformation(q).q for q in q_list)
    workers = config['workers'] if workers is None else workers

    tasks = [(q, param) for q in qs for param in params]
    logger.debug(
        'werner sweep: %d p values x %d q values, %d workers',
        len(params), len(qs), workers,
    )

    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_werner_row, tasks))
    else:
        rows = [_werner_row(task) for task in tasks]

    return SweepResult(rows)


def _werner_row(task):
    q, param = task
    terms = information_terms(werner_state(param), q)
    return SweepRow(param.p, q, *terms)


def _bipartite_state(rho):
    rho = as_density(rho)
    if isinstance(rho.dims, Bipartite) or rho.dims == Single(4):
        return rho

    raise DimensionMismatch(
        'q-information needs a bipartite or 4-dimensional state, got %s' % (
            rho.dims,
        )
    )


def _log_report(report):
    if report.satisfied:
        logger.debug('%r', report)
    elif report.guaranteed:
        logger.warning('%r', report)
    else:
        logger.info('%r', report)
