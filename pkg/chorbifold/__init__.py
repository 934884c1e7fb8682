"""
chorbifold - volume bounds for complex hyperbolic orbifolds

Builds the Lie algebra su(n,1) explicitly, equips it with its canonical
and scaled left-invariant metrics, computes the curvature of SU(n,1) and
of its quotient complex hyperbolic space, and assembles the lower bound
C(n) on the volume of every complex hyperbolic n-orbifold.

Core functionality:
- **su(n,1)**: integer structure constants, Cartan decomposition, bracket table
- **Metrics**: Killing form, Gram matrices, orthonormal frames, Wang constants
- **Curvature**: Levi-Civita connection, curvature tensor, sectional bounds,
  O'Neill's formula for the quotient
- **Model**: Hermitian form, Bergman distance, SU(n,1) action
- **Volume bounds**: Wang radius, Gunther ball volume, Vol U(n), C(n),
  symmetry-group order bounds
- Verification suites and a click CLI (``chorbifold``)
"""

__version__ = "0.1.0"
__author__ = "chorbifold contributors"
__license__ = "MIT"

from .chs_model import (
    HomogeneousPoint,
    apply_isometry,
    bergman_distance,
    hermitian_form,
    matrix_exp,
    parse_point,
    random_isometry,
)
from .curvature import (
    closed_form_curvature,
    curvature_tensor,
    holomorphic_base_curvature,
    levi_civita,
    mixed_plane_terms,
    quotient_sectional_curvature,
    sectional_bound_sample,
    sectional_curvature,
    upper_curvature_bound,
)
from .formatting import format_bound_reports, format_rows, format_verification
from .metric_geometry import (
    MetricSpec,
    gram_matrix,
    inner_product,
    killing_form,
    orthonormal_frame,
    wang_constants,
)
from .su_algebra import (
    AlgebraElement,
    bracket,
    cartan_split,
    decompose,
    reconstruct,
    standard_basis,
    structure_constants,
    verify_bracket_table,
)
from .utils import clear_cache, get_cache_stats
from .verification import VerificationReport, run_verification
from .volume_bounds import (
    BoundReport,
    bound_table,
    euler_symmetry_bound,
    gunther_ball_volume,
    log_unitary_volume,
    orbifold_bound,
    symmetry_order_bound,
    unitary_volume,
    wang_radius,
)

# Export public API
__all__ = [
    "__version__",
    # su(n,1)
    "AlgebraElement",
    "standard_basis",
    "structure_constants",
    "bracket",
    "decompose",
    "reconstruct",
    "cartan_split",
    "verify_bracket_table",
    # Metrics
    "MetricSpec",
    "killing_form",
    "inner_product",
    "gram_matrix",
    "orthonormal_frame",
    "wang_constants",
    # Curvature
    "levi_civita",
    "curvature_tensor",
    "closed_form_curvature",
    "sectional_curvature",
    "sectional_bound_sample",
    "upper_curvature_bound",
    "mixed_plane_terms",
    "quotient_sectional_curvature",
    "holomorphic_base_curvature",
    # Complex hyperbolic model
    "HomogeneousPoint",
    "hermitian_form",
    "parse_point",
    "bergman_distance",
    "matrix_exp",
    "random_isometry",
    "apply_isometry",
    # Volume bounds
    "BoundReport",
    "orbifold_bound",         # C(n) with closed-form cross-check
    "bound_table",            # C(n) for a range of n, optional progress bar
    "wang_radius",
    "gunther_ball_volume",
    "unitary_volume",
    "log_unitary_volume",
    "symmetry_order_bound",
    "euler_symmetry_bound",
    # Verification and output
    "VerificationReport",
    "run_verification",
    "format_rows",
    "format_bound_reports",
    "format_verification",
    # Cache control
    "clear_cache",            # Drop memoized structure constants, frames, tensors
    "get_cache_stats",        # Cache statistics (hits, misses, size)
]
