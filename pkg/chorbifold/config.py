"""Configuration constants for chorbifold.

Contains defaults and fixed numerical constants:
- CLI defaults (seed, trials, tolerance, digits)
- Tolerance hierarchy used by the verification suites
- Published constants that enter C(n)
- Reference volumes used as cross-checks
- Quadrature, root-finder and matrix-exponential settings
"""

import math

# Subcommands exposed by the CLI
SUBCOMMANDS = [
    'bound',
    'table',
    'wang-radius',
    'ball-volume',
    'unitary-volume',
    'symmetry-bound',
    'euler-bound',
    'distance',
    'verify',
]

# Output formats
OUTPUT_FORMATS = ['json', 'csv', 'markdown', 'plain']

# Verification suites (module name -> short description)
VERIFY_MODULES = {
    'su_algebra': 'bracket table, structure constants, Cartan decomposition',
    'metric_geometry': 'Killing form, Gram matrix, frames, Wang constants',
    'curvature': 'Levi-Civita connection, curvature tensor, bounds, submersion',
    'chs_model': 'Hermitian form, Bergman distance, SU(n,1) action',
    'volume_bounds': 'Wang radius, quadrature, C(n) cross-check',
}

# Default values
DEFAULT_SEED = 42
DEFAULT_TRIALS = 1000
DEFAULT_SAMPLES = 200
DEFAULT_TOL = 1e-10
DEFAULT_DIGITS = 6
MAX_DIGITS = 15
DEFAULT_FORMAT = 'plain'

# Tolerance hierarchy
TOL_EXACT = 1e-12      # identities exact by construction
TOL_TENSOR = 1e-10     # tensor identities
TOL_SAMPLING = 1e-9    # optimisation and sampling claims
TOL_MEMBERSHIP = 1e-12
TOL_ISOMETRY = 1e-8
TOL_BERGMAN_CLAMP = 1e-12
TOL_BERGMAN_FAIL = 1e-9
TOL_DEGENERATE = 1e-14

# Printed constants
PRINTED_WANG_RADIUS = 0.277
PRINTED_R0 = 0.1385
PRINTED_HALF_R0 = 0.06925  # r0 * sqrt(k0) = PRINTED_HALF_R0 * sqrt(36n + 21)

# Reference volumes
PI_OVER_21 = math.pi / 21                    # sharp bound, complex dimension 1
CLOSED_MANIFOLD_MIN_N2 = 8 * math.pi ** 2    # smallest closed 2-manifold
CUSPED_MANIFOLD_MIN_N2 = 8 * math.pi ** 2 / 3  # smallest 2-manifold

# Wang radius root finder
ROOT_SCAN_STEP = 1e-3
ROOT_SCAN_LIMIT = 10.0
WANG_F_SERIES_CUTOFF = 1e-4  # below this |C1 t| the removable term uses its series

# Quadrature
GAUSS_LEGENDRE_NODES = 64
GAUSS_LEGENDRE_CHECK_NODES = 128

# Matrix exponential (scaling and squaring with a Taylor kernel)
EXPM_TAYLOR_ORDER = 18
EXPM_SCALE_THRESHOLD = 0.5  # scale until the 1-norm is at most this

# Group order bounds beyond exp(LOG_RATIO_FLOAT_LIMIT) are built with decimal
# arithmetic; only the leading ~15 digits are significant
LOG_RATIO_FLOAT_LIMIT = 700.0
ORDER_BOUND_PRECISION = 40

# Decimal rendering switches to a log10 string beyond this magnitude
LINEAR_LOG10_CUTOFF = 300

# Result cache
CACHE_MAX_SIZE = 64
