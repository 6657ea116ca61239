# flake8: noqa

__version__ = '0.1.0'

from .linalg import (
    SpectralDecomposition,
    as_complex_matrix,
    hermitian_eigen,
    clamp_eigenvalues,
    matrix_power,
    q_log,
    trace,
)

from .labelings import (
    Bipartite,
    Single,
    IndexLabeling,
    TWO_QUBIT,
    SPIN_THREE_HALVES,
    get_labeling,
)

from .states import (
    DensityMatrix,
    WernerState,
    XStateParams,
    WernerParam,
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
    random_x_params,
)

from .entropy import (
    EntropyKind,
    DeformationParam,
    ProbabilityVector,
    EntropyValue,
    classical_tsallis,
    classical_renyi,
    quantum_tsallis,
    quantum_renyi,
    von_neumann,
    power_trace,
    tsallis_from_renyi,
    renyi_from_tsallis,
    classical_q_information,
)

from .inequalities import (
    InequalityReport,
    SweepResult,
    q_information,
    information_terms,
    mutual_information,
    check_subadditivity,
    check_renyi_inequality,
    x_state_q_information,
    werner_q_information_curve,
)

from .fileio import (
    read_matrix_file,
    write_matrix_file,
    read_sweep_csv,
    write_sweep_csv,
)

from .convenience import plot_q_information
from .plot_containers import Plot

from . import errors
from .configuration import config
