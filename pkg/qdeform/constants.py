GOLDEN_RATIO = 1.61803398875
GOLDEN_ARATIO = 1.0/GOLDEN_RATIO

# entrywise |m[i, j] - conj(m[j, i])|
HERMITIAN_TOL = 1.0e-12
# |Tr(rho) - 1|
TRACE_TOL = 1.0e-12
# eigenvalues in [-PSD_TOL, 0) are rounding noise and clamped to zero
PSD_TOL = 1.0e-10
# deformed formulas are used when |q - 1| > Q_BRANCH_TOL
Q_BRANCH_TOL = 1.0e-12
# Jacobi stops once the off-diagonal Frobenius norm falls below this
OFFDIAG_TOL = 1.0e-13

DEFAULT_TOL = 1.0e-10

WERNER_P_MIN = -1.0/3.0
WERNER_P_MAX = 1.0
WERNER_P_SLACK = 1.0e-12
SEPARABLE_BOUNDARY = 1.0/3.0

SWEEP_HEADER = ('p', 'q', 'I_T', 'S_joint', 'S_first', 'S_second')

EXIT_OK = 0
EXIT_INVALID_MATRIX = 1
EXIT_PARSE_ERROR = 2
EXIT_BAD_ARGUMENTS = 3
EXIT_VIOLATION = 4
