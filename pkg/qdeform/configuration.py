import os

from .constants import DEFAULT_TOL

config = {
    # budget of full Jacobi sweeps before giving up with NoConvergence
    'max_sweeps': 100,

    # default tolerance on inequality margins, --tol overrides it
    'tol': DEFAULT_TOL,

    # worker threads for sweeps and fuzz runs; results never depend on it
    'workers': int(os.environ.get('QDEFORM_WORKERS', '1')),
}
