"""
Volume lower bound C(n) for complex hyperbolic n-orbifolds.

Pipeline:
    1. Wang's radius R_G, the least positive zero of
       F(t) = exp(C1 t) - 1 + 2 sin(C2 t) - C1 t / (exp(C1 t) - 1).
    2. A ball of radius r0 = R_G / 2 sits in a fundamental domain of any
       lattice of SU(n,1); Gunther's comparison with curvature bound
       k0 = (36n+21)/4 gives Vol[SU(n,1)/Gamma] >= V(d0, k0, r0).
    3. The fibers of SU(n,1)/Gamma -> Q are copies of U(n), so
       Vol[Q] >= V(d0, k0, r0) / Vol[U(n)] = C(n).

All volumes are handled as natural logarithms; C(n) underflows a double
well before n = 100.
"""

import logging
import math
from dataclasses import asdict, dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from typing import Any, Dict, Iterable, List, Union

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import gammaln

from .config import (
    CLOSED_MANIFOLD_MIN_N2,
    CUSPED_MANIFOLD_MIN_N2,
    DEFAULT_DIGITS,
    DEFAULT_TOL,
    GAUSS_LEGENDRE_CHECK_NODES,
    GAUSS_LEGENDRE_NODES,
    LOG_RATIO_FLOAT_LIMIT,
    ORDER_BOUND_PRECISION,
    PI_OVER_21,
    PRINTED_HALF_R0,
    PRINTED_R0,
    ROOT_SCAN_LIMIT,
    ROOT_SCAN_STEP,
    WANG_F_SERIES_CUTOFF,
)
from .exceptions import InconsistencyError, InvalidParameterError, NoRootError, SignError
from .su_algebra import real_dimension, validate_dimension
from .utils import render_decimal

logger = logging.getLogger(__name__)

LOG_SMALLEST_NORMAL = math.log(np.finfo(float).tiny)
CROSSCHECK_TOL = 1e-9
LOG10_E = math.log10(math.e)

# CSV / markdown columns for bound rows
BOUND_COLUMNS = [
    'n', 'd0', 'k0', 'C1', 'C2', 'R_G', 'r0', 'L',
    'log10_VolUn', 'log10_Vball', 'log10_C', 'C',
]


def _validate_positive(value: float, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating, np.integer)):
        raise InvalidParameterError(f"{name} must be a real number, got {value!r}")
    if not (math.isfinite(value) and value > 0):
        raise InvalidParameterError(f"{name} must be positive and finite, got {value!r}")
    return float(value)


def curvature_bound(n: int) -> float:
    """k0 = (36n + 21) / 4."""
    return (36 * validate_dimension(n) + 21) / 4


# ============================================================================
# WANG RADIUS
# ============================================================================

def wang_F(t: float, C1: float = 1.0, C2: float = 1.0) -> float:
    """
    Wang's function F(t) = exp(C1 t) - 1 + 2 sin(C2 t) - C1 t / (exp(C1 t) - 1).

    The last term is evaluated by its series when C1 t is small, so
    F(t) -> -1 as t -> 0+.

    Raises:
        InvalidParameterError: If t <= 0
    """
    t = _validate_positive(t, 't')
    x = C1 * t
    if abs(x) < WANG_F_SERIES_CUTOFF:
        ratio = 1.0 - x / 2 + x ** 2 / 12 - x ** 4 / 720
    else:
        ratio = x / math.expm1(x)
    return math.expm1(x) + 2.0 * math.sin(C2 * t) - ratio


def wang_radius(C1: float = 1.0, C2: float = 1.0, tol: float = DEFAULT_TOL) -> float:
    """
    Least positive zero of :func:`wang_F`.

    A fixed-step scan (step ROOT_SCAN_STEP from t = tol) brackets the first
    sign change; bisection narrows the bracket below ``tol``.

    Args:
        C1, C2: Wang constants (> 0)
        tol: Bracket width at termination (> 0)

    Returns:
        The root, about 0.2775 for C1 = C2 = 1

    Raises:
        InvalidParameterError: On non-positive inputs
        NoRootError: If F does not change sign in (0, ROOT_SCAN_LIMIT]
    """
    C1 = _validate_positive(C1, 'C1')
    C2 = _validate_positive(C2, 'C2')
    tol = _validate_positive(tol, 'tol')

    lo = tol
    f_lo = wang_F(lo, C1, C2)
    hi = None
    steps = int(math.ceil(ROOT_SCAN_LIMIT / ROOT_SCAN_STEP))
    for step in range(1, steps + 1):
        t = min(tol + step * ROOT_SCAN_STEP, ROOT_SCAN_LIMIT)
        f_t = wang_F(t, C1, C2)
        if f_t == 0.0:
            return t
        if (f_t > 0) != (f_lo > 0):
            hi = t
            break
        lo, f_lo = t, f_t
    if hi is None:
        raise NoRootError(
            f"F(t) has no sign change in (0, {ROOT_SCAN_LIMIT}] for C1={C1}, C2={C2}"
        )

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = wang_F(mid, C1, C2)
        if f_mid == 0.0:
            lo = hi = mid
            break
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)

    h = max(tol, 1e-7)
    slope = abs(wang_F(root + h, C1, C2) - wang_F(max(root - h, tol / 2), C1, C2)) / (2 * h)
    residual = abs(wang_F(root, C1, C2))
    if residual > 10 * tol * max(slope, 1.0):
        logger.warning("Wang radius residual %.3e exceeds the guard %.3e", residual, 10 * tol * slope)
    logger.debug("Wang radius for C1=%g, C2=%g: %.15f (|F| = %.2e)", C1, C2, root, residual)
    return root


# ============================================================================
# QUADRATURE
# ============================================================================

def _validate_integral_args(m: int, L: float) -> None:
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
        raise InvalidParameterError(f"Exponent m must be a non-negative integer, got {m!r}")
    if not (isinstance(L, (int, float, np.floating)) and 0.0 <= L <= math.pi):
        raise InvalidParameterError(f"Integration limit L must lie in [0, pi], got {L!r}")


def sin_power_integral(m: int, L: float) -> float:
    """
    Integral of sin^m over [0, L] by the exact recurrence

        I_m = (-cos L sin^(m-1) L + (m-1) I_(m-2)) / m,  I_0 = L,  I_1 = 1 - cos L.

    Absolute error stays at rounding level; for L well below pi/2 and large
    m the integral itself is tiny and the relative error grows, so use
    :func:`log_sin_power_integral` there.

    Raises:
        InvalidParameterError: If m < 0 or L is outside [0, pi]

    Examples:
        >>> sin_power_integral(1, math.pi)
        2.0
    """
    _validate_integral_args(m, L)
    L = float(L)
    if L == 0.0:
        return 0.0
    sin_L, cos_L = math.sin(L), math.cos(L)
    if m % 2 == 0:
        value, start = L, 2
    else:
        value, start = 1.0 - cos_L, 3
    for k in range(start, m + 1, 2):
        value = (-cos_L * sin_L ** (k - 1) + (k - 1) * value) / k
    return value


def _panels(m: int, L: float) -> int:
    return max(1, int(math.ceil(L * math.sqrt(max(m, 1)) / 2)))


def sin_power_integral_quadrature(m: int, L: float, nodes: int = GAUSS_LEGENDRE_NODES) -> float:
    """Composite Gauss-Legendre evaluation of the same integral (cross-check path)."""
    return math.exp(log_sin_power_integral(m, L, nodes)) if L > 0 else 0.0


def log_sin_power_integral(m: int, L: float, nodes: int = GAUSS_LEGENDRE_NODES) -> float:
    """
    Natural log of the integral of sin^m over [0, L], safe for very large m.

    Composite Gauss-Legendre on panels about 2/sqrt(m) wide; the integrand
    exp(m log sin) is shifted by its largest node value before summing.

    Raises:
        InvalidParameterError: On invalid m or L, or L == 0 (log of zero)
    """
    _validate_integral_args(m, L)
    if L == 0:
        raise InvalidParameterError("log of the integral is undefined for L = 0")
    x, w = leggauss(nodes)
    edges = np.linspace(0.0, float(L), _panels(m, L) + 1)
    half = 0.5 * np.diff(edges)
    mids = 0.5 * (edges[:-1] + edges[1:])
    points = (mids[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    log_values = m * np.log(np.sin(points)) + np.log(weights)
    shift = float(np.max(log_values))
    return shift + math.log(float(np.sum(np.exp(log_values - shift))))


def quadrature_check(m: int, L: float) -> Dict[str, float]:
    """Recurrence against 64- and 128-node quadrature; relative differences."""
    exact = sin_power_integral(m, L)
    coarse = sin_power_integral_quadrature(m, L, GAUSS_LEGENDRE_NODES)
    fine = sin_power_integral_quadrature(m, L, GAUSS_LEGENDRE_CHECK_NODES)
    scale = abs(exact) if exact else 1.0
    return {
        'recurrence': exact,
        'quadrature': coarse,
        'relative_difference': abs(exact - coarse) / scale,
        'refinement_difference': abs(coarse - fine) / scale,
    }


# ============================================================================
# COMPARISON VOLUMES
# ============================================================================

def _validate_ball_args(d: int, k: float, r: float) -> None:
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidParameterError(f"Dimension d must be an integer >= 2, got {d!r}")
    _validate_positive(k, 'k')
    _validate_positive(r, 'r')


def _ball_limit(k: float, r: float) -> float:
    return min(r * math.sqrt(k), math.pi)


def gunther_ball_volume(d: int, k: float, r: float) -> float:
    """
    Volume of a radius-r ball in the d-dimensional space of constant curvature k > 0:

        V(d, k, r) = 2 (pi/k)^(d/2) / Gamma(d/2) * integral of sin^(d-1) over [0, min(r sqrt(k), pi)]

    Raises:
        InvalidParameterError: If d < 2, k <= 0 or r <= 0

    Example:
        >>> gunther_ball_volume(2, 1.0, math.pi) / math.pi
        4.0
    """
    _validate_ball_args(d, k, r)
    integral = sin_power_integral(d - 1, _ball_limit(k, r))
    return 2.0 * (math.pi / k) ** (d / 2) / math.gamma(d / 2) * integral


def log_gunther_ball_volume(d: int, k: float, r: float) -> float:
    """Natural log of :func:`gunther_ball_volume` via log-gamma and the log-space integral."""
    _validate_ball_args(d, k, r)
    return (math.log(2.0) + (d / 2) * math.log(math.pi / k) - float(gammaln(d / 2))
            + log_sin_power_integral(d - 1, _ball_limit(k, r)))


def log_unitary_volume(n: int) -> float:
    """Natural log of Vol U(n) = 2^n pi^((n^2+n)/2) / prod_{j=1}^{n-1} j!."""
    n = validate_dimension(n)
    log_factorials = float(np.sum(gammaln(np.arange(2, n + 1))))
    return n * math.log(2.0) + (n * n + n) / 2 * math.log(math.pi) - log_factorials


def unitary_volume(n: int) -> float:
    """
    Vol U(n) = 2^n pi^((n^2+n)/2) / prod_{j=1}^{n-1} j!.

    Returns math.inf once the value no longer fits a double (around n = 30);
    use :func:`log_unitary_volume` there.

    Examples:
        >>> unitary_volume(2) / math.pi ** 3
        4.0
    """
    n = validate_dimension(n)
    try:
        value = 2.0 ** n * math.pi ** ((n * n + n) / 2) / math.prod(math.factorial(j) for j in range(1, n))
    except OverflowError:
        return math.inf
    return value


# ============================================================================
# THE BOUND C(n)
# ============================================================================

@dataclass(frozen=True)
class BoundReport:
    """All quantities that go into C(n) for one dimension."""
    n: int
    d0: int
    k0: float
    C1: float
    C2: float
    R_G: float
    r0: float
    L: float
    log_vol_Un: float
    log_V_ball: float
    log_C: float
    C: Union[float, str]
    crosscheck_residual: float
    radius_source: str = 'printed'
    half_radius_deviation: float = 0.0

    @property
    def log10_C(self) -> float:
        return self.log_C * LOG10_E

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready dictionary (raw floats)."""
        return asdict(self)

    def to_row(self, digits: int = DEFAULT_DIGITS) -> Dict[str, Any]:
        """Row keyed by BOUND_COLUMNS, logs in base 10, C rendered from its log."""
        return {
            'n': self.n,
            'd0': self.d0,
            'k0': self.k0,
            'C1': self.C1,
            'C2': self.C2,
            'R_G': round(self.R_G, 12),
            'r0': self.r0,
            'L': round(self.L, 12),
            'log10_VolUn': round(self.log_vol_Un * LOG10_E, 10),
            'log10_Vball': round(self.log_V_ball * LOG10_E, 10),
            'log10_C': round(self.log10_C, 10),
            'C': render_decimal(self.log10_C, digits),
        }


def _log_closed_form(n: int, half_radius: float) -> float:
    """log C(n) from the single closed-form expression."""
    d0 = real_dimension(n)
    base = 36 * n + 21
    limit = min(half_radius * math.sqrt(base), math.pi)
    log_factorials = float(np.sum(gammaln(np.arange(2, n + 1))))
    integral = sin_power_integral(d0 - 1, limit)
    log_integral = math.log(integral) if integral > 0 else log_sin_power_integral(d0 - 1, limit)
    return ((n * n + n + 1) * math.log(2.0) + (n / 2) * math.log(math.pi) + log_factorials
            - (d0 / 2) * math.log(base) - float(gammaln(d0 / 2)) + log_integral)


def orbifold_bound(n: int, use_computed_radius: bool = False, tol: float = DEFAULT_TOL,
                   C1: float = 1.0, C2: float = 1.0) -> BoundReport:
    """
    C(n), computed by the closed form and by assembling V(d0,k0,r0) / Vol U(n).

    Args:
        n: Complex dimension (n >= 1)
        use_computed_radius: Use r0 = R_G / 2 from the root finder instead of 0.1385
        tol: Root-finder tolerance
        C1, C2: Wang constants (1 under the scaled metric)

    Returns:
        BoundReport

    Raises:
        InvalidParameterError: If n < 1
        InconsistencyError: If the two paths disagree by more than 1e-9 in log space

    Example:
        >>> orbifold_bound(2).log10_C  # C(2) is about 2.918e-09
        -8.53...
    """
    n = validate_dimension(n)
    d0 = real_dimension(n)
    k0 = curvature_bound(n)
    R_G = wang_radius(C1, C2, tol)
    if use_computed_radius:
        r0, half_radius, source = R_G / 2, R_G / 4, 'computed'
    else:
        r0, half_radius, source = PRINTED_R0, PRINTED_HALF_R0, 'printed'

    log_vol_Un = log_unitary_volume(n)
    log_V_ball = log_gunther_ball_volume(d0, k0, r0)
    log_C = log_V_ball - log_vol_Un
    log_closed = _log_closed_form(n, half_radius)
    residual = abs(log_closed - log_C)
    if residual > CROSSCHECK_TOL:
        raise InconsistencyError(
            f"C({n}) closed form and assembly disagree: |log difference| = {residual:.3e}",
            log_closed=log_closed,
            log_assembled=log_C,
        )

    C: Union[float, str] = math.exp(log_C) if log_C > LOG_SMALLEST_NORMAL else 'underflow'
    logger.info("C(%d) = %s (log10 %.6f, %s radius)", n,
                render_decimal(log_C * LOG10_E, DEFAULT_DIGITS), log_C * LOG10_E, source)
    return BoundReport(
        n=n, d0=d0, k0=k0, C1=float(C1), C2=float(C2), R_G=R_G, r0=r0,
        L=_ball_limit(k0, r0),
        log_vol_Un=log_vol_Un, log_V_ball=log_V_ball, log_C=log_C, C=C,
        crosscheck_residual=residual,
        radius_source=source,
        half_radius_deviation=half_radius - PRINTED_HALF_R0,
    )


def log_bound(n: int) -> float:
    """Natural log of C(n) with the printed radius."""
    return orbifold_bound(n).log_C


def quotient_volume_bound(n: int, r0: float = PRINTED_R0) -> float:
    """Lower bound V(d0, k0, r0) on Vol[SU(n,1)/Gamma] for every discrete Gamma."""
    n = validate_dimension(n)
    return gunther_ball_volume(real_dimension(n), curvature_bound(n), r0)


def log_quotient_volume_bound(n: int, r0: float = PRINTED_R0) -> float:
    n = validate_dimension(n)
    return log_gunther_ball_volume(real_dimension(n), curvature_bound(n), r0)


def bound_table(ns: Iterable[int], use_computed_radius: bool = False, tol: float = DEFAULT_TOL,
                show_progress: bool = False) -> List[BoundReport]:
    """
    BoundReports for several dimensions, in the order given.

    Raises:
        ImportError: If show_progress is set and tqdm is not installed
    """
    ns = [validate_dimension(n) for n in ns]
    iterator: Iterable[int] = ns
    if show_progress:
        try:
            from tqdm import tqdm
        except ImportError:
            raise ImportError(
                "tqdm is required for progress bars. "
                "Install with: pip install chorbifold[cli]"
            ) from None
        iterator = tqdm(ns, desc="C(n)", unit="dim", leave=False)
    return [orbifold_bound(n, use_computed_radius=use_computed_radius, tol=tol) for n in iterator]


def reference_comparison(n: int) -> Dict[str, float]:
    """
    Ratios of known volumes to C(n).

    n = 1: the sharp bound pi/21. n = 2: the smallest closed manifold (8 pi^2)
    and the smallest manifold (8 pi^2 / 3). Other dimensions have no entries.
    """
    n = validate_dimension(n)
    log_C = log_bound(n)
    references: Dict[str, float] = {}
    if n == 1:
        references['pi/21'] = PI_OVER_21
    elif n == 2:
        references['8pi^2 (closed manifold)'] = CLOSED_MANIFOLD_MIN_N2
        references['8pi^2/3 (manifold)'] = CUSPED_MANIFOLD_MIN_N2
    return {name: math.exp(math.log(volume) - log_C) for name, volume in references.items()}


# ============================================================================
# SYMMETRY COROLLARIES
# ============================================================================

# Relative slack on the ratio before flooring, so volume = C(n) counts as 1
FLOOR_SLACK = 1e-12


def symmetry_order_bound(volume: float, n: int) -> int:
    """
    Upper bound floor(volume / C(n)) on the order of an isometry group of an
    n-orbifold of the given volume.

    The ratio is formed in log space. Past the double range the integer is
    built from exp(log ratio) with ORDER_BOUND_PRECISION decimal digits; only
    its leading ~15 digits carry information.

    Raises:
        InvalidParameterError: If volume <= 0 or n < 1
    """
    volume = _validate_positive(volume, 'volume')
    log_ratio = math.log(volume) - log_bound(n)
    if log_ratio > LOG_RATIO_FLOAT_LIMIT:
        logger.debug("volume / C(%d) = 10^%.1f, using decimal arithmetic", n, log_ratio * LOG10_E)
        with localcontext() as ctx:
            ctx.prec = ORDER_BOUND_PRECISION
            ratio_dec = Decimal(log_ratio).exp() * (1 + Decimal(FLOOR_SLACK))
            return int(ratio_dec.to_integral_value(rounding=ROUND_FLOOR))
    ratio = math.exp(log_ratio)
    return int(math.floor(ratio * (1 + FLOOR_SLACK)))


def cgb_volume(n: int, chi: int) -> float:
    """
    Chern-Gauss-Bonnet volume (-4 pi)^n chi / (n+1)!.

    Raises:
        InvalidParameterError: If chi is not an integer
        SignError: If the result is not positive (chi must have the sign of (-1)^n)

    Example:
        >>> cgb_volume(1, -2) / math.pi
        4.0
    """
    n = validate_dimension(n)
    if isinstance(chi, bool) or not isinstance(chi, (int, np.integer)):
        raise InvalidParameterError(f"Euler characteristic must be an integer, got {chi!r}")
    if chi == 0 or (chi > 0) != (n % 2 == 0):
        parity = 'positive' if n % 2 == 0 else 'negative'
        raise SignError(
            f"(-4 pi)^{n} chi / {n + 1}! is not positive for chi={chi}.\n"
            f"For n={n} the Euler characteristic must be {parity}."
        )
    return float((-4 * math.pi) ** n * chi / math.factorial(n + 1))


def euler_symmetry_bound(n: int, chi: int) -> int:
    """floor(cgb_volume(n, chi) / C(n))."""
    return symmetry_order_bound(cgb_volume(n, chi), n)
