"""
command line interface

    qdeform validate FILE
    qdeform entropy FILE --q 2 --kind tsallis
    qdeform qinfo FILE --q 2 --check
    qdeform sweep --p-min=-1/3 --steps 100 --q 1.000001,2,5 --out werner.csv
    qdeform fuzz --seed 1 --count 1000 --q 1.1,2,3,5

exit codes: 0 ok, 1 invalid matrix, 2 parse error, 3 bad arguments,
4 inequality violation
"""
import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from .configuration import config
from .convenience import plot_q_information
from .constants import (
    WERNER_P_MIN,
    WERNER_P_MAX,
    WERNER_P_SLACK,
    EXIT_OK,
    EXIT_INVALID_MATRIX,
    EXIT_PARSE_ERROR,
    EXIT_BAD_ARGUMENTS,
    EXIT_VIOLATION,
)
from .entropy import (
    DeformationParam,
    ProbabilityVector,
    classical_tsallis,
    classical_renyi,
    quantum_tsallis,
    quantum_renyi,
    von_neumann,
)
from .errors import (
    QDeformError,
    InvalidDensityMatrix,
    DimensionMismatch,
    NoConvergence,
    InvalidDeformation,
    ParamOutOfRange,
    MatrixParseError,
)
from .fileio import (
    read_matrix_file,
    write_sweep_csv,
    write_gnuplot_script,
    format_complex,
)
from .inequalities import (
    information_terms,
    check_subadditivity,
    check_renyi_inequality,
    werner_q_information_curve,
)
from .labelings import Bipartite, get_labeling, LABELINGS
from .states import (
    density_violations,
    validate_density,
    diagonal_probabilities,
    random_density,
)

logger = logging.getLogger(__name__)


class UsageError(QDeformError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """
    report usage errors through the exit code table instead of argparse's
    fixed status 2, which is taken by matrix parse errors
    """
    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))


def cmd_validate(args):
    """
    print the Hermiticity, trace and positivity verdicts and the spectrum
    """
    m = read_matrix_file(args.file)
    labeling = get_labeling(args.labeling)
    d = m.shape[0]

    violations, spectrum = density_violations(m)
    found = {type(v).__name__: v for v in violations}

    print('file: %s' % args.file)
    print('dimension: %d' % d)
    print('hermitian: %s' % _verdict(found, 'NotHermitian'))
    print('trace: %s (%s)' % (
        _verdict(found, 'TraceNotOne'), format_complex(np.trace(m)),
    ))
    if spectrum is None:
        print('psd: not checked, matrix is not Hermitian')
    else:
        print('psd: %s' % _verdict(found, 'NotPSD'))
        print('spectrum: %s' % ' '.join(
            '%.15g' % val for val in spectrum.eigenvalues
        ))

    if d == labeling.dim:
        print('populations (%s):' % labeling.kind)
        for index in range(1, d + 1):
            print('  %s: %.15g' % (
                labeling.format_label(index), m[index-1, index-1].real,
            ))

    print('valid: %s' % ('no' if violations else 'yes'))
    return EXIT_INVALID_MATRIX if violations else EXIT_OK


def cmd_entropy(args):
    """
    print one entropy of the state in the file
    """
    if args.kind != 'von-neumann':
        q = DeformationParam(args.q)

    rho = _load_state(args)

    if args.diagonal:
        probs = ProbabilityVector.from_clamped(diagonal_probabilities(rho))
        if args.kind == 'tsallis':
            value = classical_tsallis(probs, q).value
        elif args.kind == 'renyi':
            value = classical_renyi(probs, q).value
        else:
            value = classical_tsallis(probs, 1.0).value
    else:
        if args.kind == 'tsallis':
            value = quantum_tsallis(rho, q).value
        elif args.kind == 'renyi':
            value = quantum_renyi(rho, q).value
        else:
            value = von_neumann(rho).value

    print('%.15g' % value)
    return EXIT_OK


def cmd_qinfo(args):
    """
    print the q-information, the Renyi-form left side and, with --check,
    the verdicts of both inequalities
    """
    q = DeformationParam(args.q)
    rho = _load_state(args)
    if rho.dim != 4:
        raise DimensionMismatch(
            'q-information needs a 4 x 4 matrix, got %d x %d' % (
                rho.dim, rho.dim,
            )
        )

    labeling = get_labeling(args.labeling)
    terms = information_terms(rho, q)
    subadditivity = check_subadditivity(rho, q, tol=args.tol)
    renyi = check_renyi_inequality(rho, q, tol=args.tol)

    print('labeling: %s' % labeling.kind)
    print('q: %.15g' % q.q)
    print('I_T: %.15g' % terms.i_q)
    print('S_joint: %.15g' % terms.s_joint)
    print('S_first: %.15g' % terms.s_first)
    print('S_second: %.15g' % terms.s_second)
    print('renyi_lhs: %.15g' % renyi.lhs)

    if not args.check:
        return EXIT_OK

    status = EXIT_OK
    for report in (subadditivity, renyi):
        print('%s: %s (margin %.15g, tol %g%s)' % (
            report.name, report.verdict, report.margin, report.tolerance,
            '' if report.guaranteed else ', not guaranteed for q <= 1',
        ))
        if not report.satisfied:
            status = EXIT_VIOLATION

    return status


def cmd_sweep(args):
    """
    write the Werner q-information sweep as CSV
    """
    if args.p_min > args.p_max:
        raise UsageError(
            'p-min %g is larger than p-max %g' % (args.p_min, args.p_max)
        )
    if (args.p_min < WERNER_P_MIN - WERNER_P_SLACK
            or args.p_max > WERNER_P_MAX + WERNER_P_SLACK):
        raise ParamOutOfRange(
            'p range [%g, %g] leaves [-1/3, 1]' % (args.p_min, args.p_max)
        )
    if args.steps < 2 and args.p_min < args.p_max:
        raise UsageError(
            'steps must be at least 2 to include both ends of [%g, %g]'
            % (args.p_min, args.p_max)
        )
    qs = [DeformationParam(q) for q in args.q]

    grid = np.linspace(args.p_min, args.p_max, args.steps)
    sweep = werner_q_information_curve(grid, qs, workers=args.workers)

    write_sweep_csv(args.out, sweep)
    print('wrote %d rows to %s' % (len(sweep), args.out))

    if args.gnuplot:
        script = Path(args.out).with_suffix('.gp')
        write_gnuplot_script(script, args.out, sweep.q_values)
        print('wrote gnuplot script %s' % script)

    if args.plot is not None:
        plot_q_information(sweep, file=args.plot)
        print('wrote plot %s' % args.plot)

    return EXIT_OK


def cmd_fuzz(args):
    """
    check both inequalities on seeded random two-qubit states
    """
    for q in args.q:
        if q <= 1:
            raise UsageError('q must exceed 1, got %g' % q)
    if args.count < 1:
        raise UsageError('count must be >= 1, got %d' % args.count)

    qs = [DeformationParam(q) for q in args.q]
    tol = config['tol'] if args.tol is None else args.tol
    seeds = np.random.SeedSequence(args.seed).generate_state(args.count)

    def check_one(seed):
        rho = random_density(int(seed), 4, dims=Bipartite(2, 2))
        return [
            (
                check_subadditivity(rho, q, tol=tol),
                check_renyi_inequality(rho, q, tol=tol),
            )
            for q in qs
        ]

    workers = config['workers'] if args.workers is None else args.workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(check_one, seeds))
    else:
        results = [check_one(seed) for seed in seeds]

    print('seed: %d' % args.seed)
    print('states: %d' % args.count)
    print('tol: %g' % tol)

    total = 0
    for iq, q in enumerate(qs):
        subadditivity = [result[iq][0] for result in results]
        renyi = [result[iq][1] for result in results]
        nbad = sum(
            not report.satisfied for report in subadditivity + renyi
        )
        total += nbad
        print(
            'q=%.15g: min I_T %.17g, min renyi margin %.17g, violations %d'
            % (
                q.q,
                min(report.margin for report in subadditivity),
                min(report.margin for report in renyi),
                nbad,
            )
        )

        for index, (sub, ren) in enumerate(zip(subadditivity, renyi)):
            for report in (sub, ren):
                if not report.satisfied:
                    print('  violation: state %d (seed %d) %r' % (
                        index, seeds[index], report,
                    ))

    print('violations: %d' % total)
    return EXIT_VIOLATION if total else EXIT_OK


def make_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        '--tol', type=float, default=None,
        help='tolerance on inequality margins, default %g' % config['tol'],
    )
    common.add_argument(
        '--labeling', choices=sorted(LABELINGS), default='two-qubit',
        help='read 4 x 4 matrices as two qubits or as a spin-3/2 qudit',
    )
    common.add_argument(
        '-v', '--verbose', action='store_true',
        help='debug logging on standard error',
    )

    parser = _ArgumentParser(
        prog='qdeform',
        description='deformed entropies and entropic inequalities '
                    'for two-qubit and spin-3/2 states',
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    validate = subparsers.add_parser(
        'validate', parents=[common],
        help='check that a matrix file holds a density matrix',
    )
    validate.add_argument('file')
    validate.set_defaults(func=cmd_validate)

    entropy = subparsers.add_parser(
        'entropy', parents=[common], help='entropy of a state',
    )
    entropy.add_argument('file')
    entropy.add_argument('--q', type=_real, default=2.0)
    entropy.add_argument(
        '--kind', choices=['tsallis', 'renyi', 'von-neumann'],
        default='tsallis',
    )
    entropy.add_argument(
        '--diagonal', action='store_true',
        help='classical entropy of the diagonal instead of the spectrum',
    )
    entropy.set_defaults(func=cmd_entropy)

    qinfo = subparsers.add_parser(
        'qinfo', parents=[common], help='q-information of a 4 x 4 state',
    )
    qinfo.add_argument('file')
    qinfo.add_argument('--q', type=_real, default=2.0)
    qinfo.add_argument(
        '--check', action='store_true',
        help='report inequality verdicts, exit 4 on a violation',
    )
    qinfo.set_defaults(func=cmd_qinfo)

    sweep = subparsers.add_parser(
        'sweep', parents=[common],
        help='Werner state q-information against p, as CSV',
    )
    sweep.add_argument('--p-min', type=_real, default=WERNER_P_MIN)
    sweep.add_argument('--p-max', type=_real, default=WERNER_P_MAX)
    sweep.add_argument('--steps', type=_positive_int, default=100)
    sweep.add_argument('--q', type=_real_list, default=[1.000001, 2.0, 5.0])
    sweep.add_argument('--out', required=True)
    sweep.add_argument(
        '--gnuplot', action='store_true',
        help='also write a gnuplot script next to the CSV',
    )
    sweep.add_argument(
        '--plot', default=None, help='also render the curves to this image',
    )
    sweep.add_argument('--workers', type=_positive_int, default=None)
    sweep.set_defaults(func=cmd_sweep)

    fuzz = subparsers.add_parser(
        'fuzz', parents=[common],
        help='check the inequalities on random two-qubit states',
    )
    fuzz.add_argument('--seed', type=_nonnegative_int, default=1)
    fuzz.add_argument('--count', type=_positive_int, default=1000)
    fuzz.add_argument('--q', type=_real_list, default=[1.1, 2.0, 3.0, 5.0])
    fuzz.add_argument('--workers', type=_positive_int, default=None)
    fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None):
    """
    run the command line interface

    Parameters
    ----------
    argv: list of str, optional
        Arguments without the program name, default sys.argv[1:]

    Returns
    -------
    exit status
    """
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        _error(err)
        return EXIT_BAD_ARGUMENTS

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    logger.debug('running %s', args.command)

    try:
        return args.func(args)
    except MatrixParseError as err:
        _error(err)
        return EXIT_PARSE_ERROR
    except OSError as err:
        _error(err)
        return EXIT_PARSE_ERROR
    except (UsageError, InvalidDeformation, ParamOutOfRange) as err:
        _error(err)
        return EXIT_BAD_ARGUMENTS
    except (InvalidDensityMatrix, DimensionMismatch, NoConvergence) as err:
        _error(err)
        return EXIT_INVALID_MATRIX


def _load_state(args):
    m = read_matrix_file(args.file)
    labeling = get_labeling(args.labeling)

    dims = labeling.dims if m.shape[0] == labeling.dim else None
    return validate_density(m, dims=dims)


def _verdict(found, name):
    if name in found:
        return '%s: %s' % (name, found[name])
    return 'ok'


def _error(err):
    if isinstance(err, InvalidDensityMatrix):
        print('error: %s: %s' % (', '.join(err.names), err), file=sys.stderr)
    else:
        print('error: %s' % err, file=sys.stderr)


def _real(text):
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError('not a real number: %r' % text)


def _real_list(text):
    values = [_real(part) for part in text.split(',') if part.strip()]
    if not values:
        raise argparse.ArgumentTypeError('empty list: %r' % text)
    return values


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not an integer: %r' % text)
    if value < 1:
        raise argparse.ArgumentTypeError('must be >= 1, got %d' % value)
    return value


def _nonnegative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not an integer: %r' % text)
    if value < 0:
        raise argparse.ArgumentTypeError('must be >= 0, got %d' % value)
    return value


if __name__ == '__main__':
    sys.exit(main())
