"""
Verification suites behind ``chorbifold verify``.

Each suite runs the invariants of one module on seeded samples and returns
CheckResults; a failed invariant is a report entry, never an exception.
Computed values that contradict printed claims are collected separately as
discrepancies.
"""

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
from scipy.linalg import expm

from .chs_model import (
    HomogeneousPoint,
    apply_isometry,
    bergman_distance,
    hermitian_form,
    isometry_residual,
    matrix_exp,
    random_isometry,
)
from .config import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    PI_OVER_21,
    PRINTED_HALF_R0,
    PRINTED_R0,
    PRINTED_WANG_RADIUS,
    TOL_EXACT,
    TOL_SAMPLING,
    TOL_TENSOR,
    VERIFY_MODULES,
)
from .curvature import (
    CASE_PARTS,
    basis_plane_max,
    closed_form_curvature,
    complex_structure,
    curvature_form,
    curvature_operator,
    curvature_tensor,
    holomorphic_base_curvature,
    holomorphic_bracket_closed_form,
    levi_civita,
    mixed_plane_terms,
    quotient_sectional_curvature,
    random_unit_horizontal,
    sectional_bound_sample,
    sectional_curvature,
)
from .exceptions import InvalidParameterError
from .metric_geometry import (
    MetricSpec,
    cartan_ad_rayleigh_bound,
    frame_structure_constants,
    gram_discrepancies,
    gram_matrix,
    inner_product,
    killing_form,
    killing_form_closed,
    orthonormal_frame,
    wang_constants,
)
from .su_algebra import (
    basis_element,
    bracket,
    decompose,
    h_slice,
    is_member,
    jacobi_residual,
    part_masks,
    random_element,
    reconstruct,
    structure_constants,
    validate_dimension,
    verify_bracket_table,
)
from .utils import derive_seed, make_rng
from .volume_bounds import orbifold_bound, quadrature_check, wang_F, wang_radius

logger = logging.getLogger(__name__)

# Per-case cap on closed-form curvature triples
CLOSED_FORM_TRIPLES = 500


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one invariant check."""
    check: str
    module: str
    n: int
    passed: bool
    metric: Optional[str] = None
    trials: int = 0
    max_residual: Optional[float] = None
    max_found: Optional[float] = None
    bound: Optional[float] = None
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        data = {key: value for key, value in asdict(self).items() if value is not None}
        data['pass'] = data.pop('passed')
        return data


@dataclass
class VerificationReport:
    """All checks of a verification run plus the discrepancies found."""
    n: int
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    discrepancies: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'seed': self.seed,
            'passed': self.passed,
            'checks': [check.to_dict() for check in self.checks],
            'discrepancies': list(self.discrepancies),
        }


def _residual_check(check: str, module: str, n: int, residual: float, tol: float,
                    trials: int = 0, metric: Optional[str] = None, detail: str = '') -> CheckResult:
    residual = float(residual)
    return CheckResult(check, module, n, bool(residual <= tol), metric=metric, trials=trials,
                       max_residual=residual, bound=tol, detail=detail)


def _coeff_gap(A, B) -> float:
    return float(np.max(np.abs(decompose(A).coeffs - decompose(B).coeffs)))


# ============================================================================
# su_algebra
# ============================================================================

def verify_su_algebra(n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> List[CheckResult]:
    """Bracket table, structure constants, Cartan grading and coordinates."""
    module = 'su_algebra'
    checks = []
    table = verify_bracket_table(n)
    instances = sum(item.instances for item in table.checks)
    checks.append(CheckResult(
        'bracket_table', module, n, table.passed, trials=instances,
        max_residual=max((item.worst_residual for item in table.checks), default=0.0), bound=0.0,
        detail=f"{sum(not item.skipped for item in table.checks)} identities applicable",
    ))

    constants = structure_constants(n)
    c = constants.c
    checks.append(_residual_check('jacobi_identity', module, n, jacobi_residual(constants), 0.0))
    checks.append(_residual_check('bracket_antisymmetry', module, n,
                                  np.max(np.abs(c + c.transpose(1, 0, 2))), 0.0))

    k_mask, p_mask = part_masks(n)
    leak = max(
        np.max(np.abs(c[np.ix_(k_mask, k_mask, p_mask)]), initial=0),
        np.max(np.abs(c[np.ix_(k_mask, p_mask, k_mask)]), initial=0),
        np.max(np.abs(c[np.ix_(p_mask, p_mask, p_mask)]), initial=0),
    )
    checks.append(_residual_check('cartan_grading', module, n, leak, 0.0))

    rng = make_rng(seed)
    worst_roundtrip, members = 0.0, True
    for _ in range(trials):
        X = random_element(n, rng)
        Y = random_element(n, rng)
        worst_roundtrip = max(worst_roundtrip, float(np.max(np.abs(reconstruct(decompose(X)).entries - X.entries))))
        members = members and is_member(bracket(X, Y))
    checks.append(_residual_check('decompose_reconstruct', module, n, worst_roundtrip, TOL_EXACT, trials))
    checks.append(CheckResult('bracket_closure', module, n, members, trials=trials))
    return checks


# ============================================================================
# metric_geometry
# ============================================================================

def verify_metric_geometry(n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                           samples: int = DEFAULT_SAMPLES) -> List[CheckResult]:
    """Killing form, Gram matrices, frames, ad skewness and Wang constants."""
    module = 'metric_geometry'
    checks = []
    rng = make_rng(seed)

    worst_relative, worst_symmetry = 0.0, 0.0
    for _ in range(trials):
        X = random_element(n, rng)
        Y = random_element(n, rng)
        traced = killing_form(X, Y)
        worst_relative = max(worst_relative, abs(traced - killing_form_closed(X, Y)) / max(1.0, abs(traced)))
        worst_symmetry = max(worst_symmetry, abs(traced - killing_form(Y, X)) / max(1.0, abs(traced)))
    checks.append(_residual_check('killing_closed_form', module, n, worst_relative, TOL_SAMPLING, trials))
    checks.append(_residual_check('killing_symmetry', module, n, worst_symmetry, TOL_EXACT, trials))

    hs = h_slice(n)
    for m in (MetricSpec.canonical(n), MetricSpec.scaled(n)):
        gram = gram_matrix(n, m).entries
        expected_diagonal = 4 * (n + 1) * m.scale
        checks.append(_residual_check('gram_diagonal', module, n,
                                      np.max(np.abs(np.diag(gram) - expected_diagonal)), TOL_EXACT, metric=str(m)))
        off = gram - np.diag(np.diag(gram))
        outside = off.copy()
        outside[hs, hs] = 0.0
        checks.append(_residual_check('gram_off_diagonal', module, n, np.max(np.abs(outside)),
                                      TOL_EXACT, metric=str(m), detail='entries outside the H block'))
        h_block = off[hs, hs]
        expected_h = 2 * (n + 1) * m.scale * (np.ones((n, n)) - np.eye(n))
        checks.append(_residual_check('gram_h_block', module, n, np.max(np.abs(h_block - expected_h)),
                                      TOL_EXACT, metric=str(m),
                                      detail='<h_j,h_k> = 2(n+1) scale for j != k'))
        smallest = float(np.min(np.linalg.eigvalsh(gram)))
        checks.append(CheckResult('gram_positive_definite', module, n, smallest > 0, metric=str(m),
                                  max_found=smallest, bound=0.0))

        frame = orthonormal_frame(n, m)
        frame_gram = frame.vectors.T @ gram @ frame.vectors
        checks.append(_residual_check('frame_orthonormal', module, n,
                                      np.max(np.abs(frame_gram - np.eye(len(gram)))), TOL_EXACT, metric=str(m)))

    m = MetricSpec.scaled(n)
    cf = frame_structure_constants(n, m)
    k_mask, _ = part_masks(n)
    worst_skew = 0.0
    for _ in range(min(trials, 200)):
        x = rng.standard_normal(len(k_mask)) * k_mask
        ad = np.einsum('a,abc->cb', x, cf)[np.ix_(k_mask, k_mask)]
        worst_skew = max(worst_skew, float(np.max(np.abs(ad + ad.T))))
    checks.append(_residual_check('ad_skew_on_k', module, n, worst_skew, TOL_TENSOR, min(trials, 200), str(m)))

    C1, C2 = wang_constants(n, m, samples=samples, seed=derive_seed(seed, 1))
    for name, value in (('C1', C1), ('C2', C2)):
        checks.append(CheckResult(f'wang_{name}', module, n, 0.999 <= value <= 1.001, metric=str(m),
                                  trials=samples, max_found=value, bound=1.0))
    canonical = MetricSpec.canonical(n)
    target = (n + 1) ** -0.5
    C1c, C2c = wang_constants(n, canonical, samples=samples, seed=derive_seed(seed, 2))
    for name, value in (('C1', C1c), ('C2', C2c)):
        checks.append(CheckResult(f'wang_{name}', module, n, abs(value - target) <= 1e-3,
                                  metric=str(canonical), trials=samples, max_found=value, bound=target))
    checks.append(_residual_check('cartan_rayleigh_bound', module, n,
                                  abs(cartan_ad_rayleigh_bound(n, m) - 1.0), TOL_EXACT, metric=str(m)))
    return checks


def metric_discrepancies(n: int) -> List[Dict[str, Any]]:
    """Gram entries that contradict "0 for distinct basis elements"."""
    return [
        dict(entry, source='Gram matrix, distinct basis elements',
             metric='canonical', note='tr(h_j h_k) = -1 gives <h_j,h_k> = 2(n+1)')
        for entry in gram_discrepancies(n, MetricSpec.canonical(n))
    ]


# ============================================================================
# curvature
# ============================================================================

def verify_curvature(n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> List[CheckResult]:
    """Connection, tensor symmetries, closed forms, bounds and the submersion."""
    module = 'curvature'
    checks = []
    m = MetricSpec.scaled(n)
    rng = make_rng(seed)

    conn = levi_civita(n, m)
    checks.append(_residual_check('torsion_free', module, n, conn.torsion_residual(), TOL_TENSOR, metric=str(m)))
    checks.append(_residual_check('metric_compatible', module, n, conn.compatibility_residual(), TOL_TENSOR,
                                  metric=str(m)))
    tensor = curvature_tensor(n, m)
    checks.append(_residual_check('tensor_antisymmetry', module, n, tensor.antisymmetry_residual(), TOL_TENSOR,
                                  metric=str(m)))
    checks.append(_residual_check('tensor_pair_symmetry', module, n, tensor.pair_symmetry_residual(), TOL_TENSOR,
                                  metric=str(m)))
    checks.append(_residual_check('first_bianchi', module, n, tensor.bianchi_residual(), TOL_TENSOR, metric=str(m)))

    triples = min(trials, CLOSED_FORM_TRIPLES)
    for case, parts in CASE_PARTS.items():
        worst = 0.0
        for _ in range(triples):
            A, B, C = (random_element(n, rng, part=part) for part in parts)
            worst = max(worst, _coeff_gap(closed_form_curvature(case, A, B, C), curvature_operator(A, B, C, m)))
        checks.append(_residual_check(f'closed_form_{case}', module, n, worst, TOL_TENSOR, triples, str(m)))

    pairs = min(trials, 200)
    worst = {'UVWX': 0.0, 'XYZU': 0.0, 'UVVU': 0.0, 'XYYX': 0.0, 'UXXU': 0.0}
    for _ in range(pairs):
        U, V, W = (random_element(n, rng, part='k') for _ in range(3))
        X, Y, Z = (random_element(n, rng, part='p') for _ in range(3))
        UV, XY, UX = bracket(U, V), bracket(X, Y), bracket(U, X)
        worst['UVWX'] = max(worst['UVWX'], abs(curvature_form(U, V, W, X, m)))
        worst['XYZU'] = max(worst['XYZU'], abs(curvature_form(X, Y, Z, U, m)))
        worst['UVVU'] = max(worst['UVVU'], abs(curvature_form(U, V, V, U, m) - 0.25 * inner_product(UV, UV, m)))
        worst['XYYX'] = max(worst['XYYX'], abs(curvature_form(X, Y, Y, X, m) + 1.75 * inner_product(XY, XY, m)))
        worst['UXXU'] = max(worst['UXXU'], abs(curvature_form(U, X, X, U, m) - 0.25 * inner_product(UX, UX, m)))
    for name, value in worst.items():
        checks.append(_residual_check(f'inner_product_{name}', module, n, value, TOL_TENSOR, pairs, str(m)))

    plane_max = basis_plane_max(n, m)
    checks.append(CheckResult('basis_plane_max', module, n, abs(plane_max - 0.25) <= TOL_EXACT, metric=str(m),
                              max_found=plane_max, bound=0.25))
    sample = sectional_bound_sample(n, trials, derive_seed(seed, 3))
    checks.append(CheckResult('sectional_upper_bound', module, n, sample.within_bound, metric=str(m),
                              trials=trials, max_found=sample.max_found, bound=sample.bound))

    worst_scale = 0.0
    canonical = MetricSpec.canonical(n)
    for _ in range(min(trials, 50)):
        X, Y = random_element(n, rng), random_element(n, rng)
        worst_scale = max(worst_scale, abs(sectional_curvature(X, Y, canonical)
                                           - sectional_curvature(X, Y, m) / (n + 1)))
    checks.append(_residual_check('scale_covariance', module, n, worst_scale, TOL_TENSOR, min(trials, 50)))

    worst_holo, worst_bracket, worst_quotient, worst_mixed = 0.0, 0.0, 0.0, 0.0
    for _ in range(trials):
        X = random_unit_horizontal(n, rng, m)
        worst_holo = max(worst_holo, abs(holomorphic_base_curvature(X, m) + 1.0))
        worst_bracket = max(worst_bracket, _coeff_gap(holomorphic_bracket_closed_form(X),
                                                      bracket(X, complex_structure(X))))
    for _ in range(min(trials, 200)):
        X, Y = random_unit_horizontal(n, rng, m), random_unit_horizontal(n, rng, m)
        K = quotient_sectional_curvature(X, Y, m)
        worst_quotient = max(worst_quotient, max(K - (-0.25), -1.0 - K, 0.0))
        terms = mixed_plane_terms(random_element(n, rng), random_element(n, rng), m)
        worst_mixed = max(worst_mixed, abs(terms.term_sum - terms.total) / max(1.0, abs(terms.total)))
    checks.append(_residual_check('holomorphic_curvature', module, n, worst_holo, TOL_SAMPLING, trials, str(m)))
    checks.append(_residual_check('holomorphic_bracket', module, n, worst_bracket, TOL_TENSOR, trials))
    checks.append(_residual_check('quotient_pinching', module, n, worst_quotient, TOL_SAMPLING,
                                  min(trials, 200), str(m), detail='K in [-1, -1/4]'))
    checks.append(_residual_check('mixed_plane_terms', module, n, worst_mixed, TOL_TENSOR, min(trials, 200), str(m)))

    if n == 1:
        X = 0.5 * basis_element(1, 'beta_p', 1)
        Y = 0.5 * basis_element(1, 'ialpha_p', 1)
        checks.append(_residual_check('n1_plane_curvature', module, n,
                                      abs(quotient_sectional_curvature(X, Y, m) + 1.0), TOL_TENSOR, metric=str(m),
                                      detail='quotient curvature of the p plane'))
    return checks


def curvature_discrepancies(n: int) -> List[Dict[str, Any]]:
    """The group curvature of a p plane is -7/4 |[X,Y]|^2; only the quotient sees -1."""
    if n != 1:
        return []
    m = MetricSpec.scaled(1)
    X = 0.5 * basis_element(1, 'beta_p', 1)
    Y = 0.5 * basis_element(1, 'ialpha_p', 1)
    return [{
        'source': 'sectional curvature of the p plane at n=1',
        'metric': 'scaled',
        'claimed': -1.0,
        'computed': sectional_curvature(X, Y, m),
        'note': 'the value -1 holds for the quotient H^1_C, not for SU(1,1)',
    }]


# ============================================================================
# chs_model
# ============================================================================

def random_point(n: int, rng: np.random.Generator) -> HomogeneousPoint:
    """Random point of the ball model lifted with a random nonzero scalar."""
    direction = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    radius = 0.95 * rng.uniform() ** (1 / (2 * n))
    x = radius * direction / np.linalg.norm(direction)
    scalar = complex(*rng.uniform(0.5, 2.0, size=2))
    return HomogeneousPoint(n, scalar * np.append(x, 1.0))


def verify_chs_model(n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> List[CheckResult]:
    """Hermitian form, Bergman distance, exponential and the SU(n,1) action."""
    module = 'chs_model'
    checks = []
    rng = make_rng(seed)
    size = n + 1
    basis = np.eye(size)
    signature_gap = max(abs(hermitian_form(basis[j], basis[j]) - (1 if j < n else -1)) for j in range(size))
    checks.append(_residual_check('form_signature', module, n, signature_gap, 0.0))

    center = HomogeneousPoint.center(n)
    offset = np.zeros(size, dtype=complex)
    offset[0], offset[-1] = 0.5, 1.0
    example = abs(bergman_distance(center, HomogeneousPoint(n, offset)) - 2 * math.atanh(0.5))
    checks.append(_residual_check('distance_example', module, n, example, TOL_SAMPLING))

    worst_symmetry, worst_triangle, worst_zero = 0.0, 0.0, 0.0
    for _ in range(trials):
        z, w, u = (random_point(n, rng) for _ in range(3))
        d_zw, d_wz = bergman_distance(z, w), bergman_distance(w, z)
        worst_symmetry = max(worst_symmetry, abs(d_zw - d_wz))
        worst_triangle = max(worst_triangle, d_zw - bergman_distance(z, u) - bergman_distance(u, w))
        worst_zero = max(worst_zero, bergman_distance(z, z))
    checks.append(_residual_check('distance_symmetry', module, n, worst_symmetry, 0.0, trials))
    checks.append(_residual_check('triangle_inequality', module, n, max(worst_triangle, 0.0), TOL_SAMPLING, trials))
    checks.append(_residual_check('distance_zero', module, n, worst_zero, TOL_SAMPLING, trials))

    worst_invariance, worst_isometry, worst_det, worst_exp = 0.0, 0.0, 0.0, 0.0
    for trial in range(trials):
        A = random_isometry(n, derive_seed(seed, 4, trial), magnitude=float(rng.uniform(0.1, 3.0)))
        worst_isometry = max(worst_isometry, isometry_residual(A))
        worst_det = max(worst_det, abs(np.linalg.det(A) - 1.0))
        z, w = random_point(n, rng), random_point(n, rng)
        moved = bergman_distance(apply_isometry(A, z), apply_isometry(A, w))
        worst_invariance = max(worst_invariance, abs(moved - bergman_distance(z, w)))
    for _ in range(min(trials, 100)):
        M = random_element(n, rng).entries * rng.uniform(0.1, 10.0) / max(1.0, n)
        oracle = expm(M)
        worst_exp = max(worst_exp, float(np.linalg.norm(matrix_exp(M) - oracle) / np.linalg.norm(oracle)))
    checks.append(_residual_check('isometry_invariance', module, n, worst_invariance, TOL_SAMPLING, trials))
    checks.append(_residual_check('form_preserved', module, n, worst_isometry, TOL_SAMPLING, trials))
    checks.append(_residual_check('unit_determinant', module, n, worst_det, TOL_SAMPLING, trials))
    checks.append(_residual_check('matrix_exp_oracle', module, n, worst_exp, 1e-11, min(trials, 100)))

    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size))
    stabilizer = np.diag(phases)
    fixed = apply_isometry(stabilizer, center)
    checks.append(_residual_check('stabilizer_fixes_center', module, n,
                                  bergman_distance(fixed, center), TOL_SAMPLING))

    if n == 1:
        worst_plane = 0.0
        for _ in range(min(trials, 200)):
            x = 0.99 * rng.uniform()
            point = HomogeneousPoint(1, np.array([x, 1.0], dtype=complex))
            worst_plane = max(worst_plane, abs(bergman_distance(center, point) - 2 * math.atanh(x)))
        checks.append(_residual_check('real_plane_distance', module, n, worst_plane, TOL_SAMPLING,
                                      min(trials, 200)))
    return checks


# ============================================================================
# volume_bounds
# ============================================================================

# (m, L) pairs where the recurrence is checked against quadrature
QUADRATURE_CASES = ((1, math.pi), (2, 1.5), (7, 2.0), (24, 1.8), (80, math.pi), (200, 2.5))


def verify_volume_bounds(n: int, trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> List[CheckResult]:
    """Wang radius, quadrature, the C(n) cross-check and the printed constants."""
    module = 'volume_bounds'
    checks = []
    root = wang_radius()
    checks.append(CheckResult('wang_radius', module, n, 0.2770 <= root <= 0.2780,
                              max_found=root, bound=PRINTED_WANG_RADIUS))
    checks.append(_residual_check('wang_root_residual', module, n, abs(wang_F(root)), TOL_TENSOR))
    checks.append(_residual_check('half_radius', module, n, abs(root / 2 - PRINTED_R0), 5e-4,
                                  detail='R_G/2 against 0.1385'))

    worst_quadrature = max(quadrature_check(m, L)['relative_difference'] for m, L in QUADRATURE_CASES)
    checks.append(_residual_check('quadrature_recurrence', module, n, worst_quadrature, TOL_SAMPLING,
                                  len(QUADRATURE_CASES)))

    report = orbifold_bound(n)
    checks.append(_residual_check('bound_crosscheck', module, n, report.crosscheck_residual, 1e-9,
                                  detail='closed form vs assembled, log space'))
    checks.append(CheckResult('log10_C_finite', module, n, math.isfinite(report.log10_C),
                              max_found=report.log10_C))
    L_expected = min(PRINTED_HALF_R0 * math.sqrt(36 * n + 21), math.pi)
    checks.append(_residual_check('integration_limit', module, n, abs(report.L - L_expected), TOL_EXACT))
    if n == 1:
        C = float(report.C)
        checks.append(CheckResult('C1_printed_band', module, n, 0.0015 < C < 0.0025, max_found=C,
                                  bound=0.002))
        checks.append(CheckResult('C1_below_sharp', module, n, C < PI_OVER_21, max_found=C,
                                  bound=PI_OVER_21))
    if n == 2:
        C = float(report.C)
        checks.append(CheckResult('C2_printed_value', module, n, abs(C / 2.918e-9 - 1) <= 0.01,
                                  max_found=C, bound=2.918e-9))
    return checks


# ============================================================================
# AGGREGATION
# ============================================================================

SUITES: Dict[str, Callable[..., List[CheckResult]]] = {
    'su_algebra': verify_su_algebra,
    'metric_geometry': verify_metric_geometry,
    'curvature': verify_curvature,
    'chs_model': verify_chs_model,
    'volume_bounds': verify_volume_bounds,
}


def run_verification(n: int, modules: Optional[Sequence[str]] = None, trials: int = DEFAULT_TRIALS,
                     seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> VerificationReport:
    """
    Run the verification suites for one dimension.

    Args:
        n: Complex dimension
        modules: Suite names (default: all, in VERIFY_MODULES order)
        trials: Samples per sampled invariant
        seed: Base seed; each suite derives its own stream
        samples: Random candidates per part for the Wang constants

    Raises:
        InvalidParameterError: On an unknown module or invalid numeric input
    """
    n = validate_dimension(n)
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise InvalidParameterError(f"trials must be a positive integer, got {trials!r}")
    selected = list(modules) if modules else list(VERIFY_MODULES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise InvalidParameterError(
            f"Unknown verification module(s): {', '.join(unknown)}\n"
            f"Available: {', '.join(SUITES)}"
        )
    report = VerificationReport(n, seed)
    for index, name in enumerate(VERIFY_MODULES):
        if name not in selected:
            continue
        suite_seed = derive_seed(seed, index)
        logger.info("Running %s checks for n=%d (%d trials)", name, n, trials)
        if name == 'metric_geometry':
            results = verify_metric_geometry(n, trials, suite_seed, samples)
        else:
            results = SUITES[name](n, trials, suite_seed)
        report.checks.extend(results)
        failed = [result.check for result in results if not result.passed]
        if failed:
            logger.warning("%s: %d check(s) failed: %s", name, len(failed), ', '.join(failed))
    if 'metric_geometry' in selected:
        report.discrepancies.extend(metric_discrepancies(n))
    if 'curvature' in selected:
        report.discrepancies.extend(curvature_discrepancies(n))
    return report
