"""
Levi-Civita connection and curvature of left-invariant metrics on SU(n,1).

Everything is computed in the orthonormal frame of
:func:`chorbifold.metric_geometry.orthonormal_frame`, where the Koszul
formula for left-invariant fields reduces to structure-constant
contractions:

    <nabla_a f_b, f_c> = 1/2 (c_ab^c - c_bc^a + c_ca^b)

Curvature follows R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
and sectional curvature is K(X,Y) = <R(X,Y)Y, X> / (|X|^2 |Y|^2 - <X,Y>^2).

The submersion part (O'Neill) treats p as the horizontal space of
SU(n,1) -> SU(n,1)/S(U(n) x U(1)) and k as the vertical one.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Literal, NamedTuple, Optional

import numpy as np

from .config import DEFAULT_SEED, DEFAULT_TRIALS, TOL_DEGENERATE, TOL_SAMPLING, TOL_TENSOR
from .exceptions import DegeneratePlaneError, InvalidParameterError, PreconditionError, ShapeError
from .metric_geometry import (
    MetricSpec,
    frame_coordinates,
    frame_structure_constants,
    inner_product,
    norm,
    orthonormal_frame,
)
from .su_algebra import (
    AlgebraElement,
    RealCoordinates,
    basis_indices,
    bracket,
    cartan_split,
    decompose,
    ordinal_of,
    part_masks,
    reconstruct,
    real_dimension,
    validate_dimension,
)
from .utils import freeze, get_cache, make_rng

logger = logging.getLogger(__name__)

CurvatureCase = Literal['UVW', 'XYZ', 'UXY', 'XYV']

# Which Cartan part each argument of a closed-form case must lie in
CASE_PARTS: Dict[str, str] = {
    'UVW': 'kkk',
    'XYZ': 'ppp',
    'UXY': 'kpp',
    'XYV': 'ppk',
}


@dataclass(frozen=True, eq=False)
class ConnectionCoefficients:
    """Levi-Civita connection in the orthonormal frame.

    ``gamma[a, b]`` holds the frame coordinates of nabla_{f_a} f_b.
    """
    n: int
    metric: MetricSpec
    gamma: np.ndarray = field(repr=False)

    def covariant(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """nabla_x y for left-invariant fields given in frame coordinates (batched)."""
        return np.einsum('...a,...b,abc->...c', x, y, self.gamma)

    def torsion_residual(self) -> float:
        """max |nabla_a f_b - nabla_b f_a - [f_a, f_b]| over the frame."""
        cf = frame_structure_constants(self.n, self.metric)
        return float(np.max(np.abs(self.gamma - self.gamma.transpose(1, 0, 2) - cf)))

    def compatibility_residual(self) -> float:
        """max |<nabla_a f_b, f_c> + <f_b, nabla_a f_c>| over the frame."""
        return float(np.max(np.abs(self.gamma + self.gamma.transpose(0, 2, 1))))


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """Curvature tensor R[i, j, k, l] = <R(f_i, f_j) f_k, f_l> in the orthonormal frame."""
    n: int
    metric: MetricSpec
    R: np.ndarray = field(repr=False)

    def antisymmetry_residual(self) -> float:
        first = np.max(np.abs(self.R + self.R.transpose(1, 0, 2, 3)))
        second = np.max(np.abs(self.R + self.R.transpose(0, 1, 3, 2)))
        return float(max(first, second))

    def pair_symmetry_residual(self) -> float:
        return float(np.max(np.abs(self.R - self.R.transpose(2, 3, 0, 1))))

    def bianchi_residual(self) -> float:
        cyclic = self.R + self.R.transpose(1, 2, 0, 3) + self.R.transpose(2, 0, 1, 3)
        return float(np.max(np.abs(cyclic)))

    def sectional(self, x: np.ndarray, y: np.ndarray) -> float:
        """Sectional curvature of the plane of two frame-coordinate vectors."""
        numerator = np.einsum('ijkl,i,j,k,l->', self.R, x, y, y, x)
        denominator = (x @ x) * (y @ y) - (x @ y) ** 2
        return float(numerator / denominator)


class SectionalBoundSample(NamedTuple):
    """Result of a sectional-curvature sweep against the (36n+21)/4 bound."""
    max_found: float
    bound: float
    within_bound: bool


@dataclass(frozen=True)
class MixedPlaneTerms:
    """Decomposition of <R(A,B)B,A> for A = X + U, B = Y + V (X, Y in p; U, V in k).

    ``bounds`` are the per-term upper bounds for unit A, B that add up to
    (36n+21)/4.
    """
    n: int
    terms: Dict[str, float]
    bounds: Dict[str, float]
    total: float

    @property
    def term_sum(self) -> float:
        return float(sum(self.terms.values()))

    @property
    def bound_sum(self) -> float:
        return float(sum(self.bounds.values()))


# ============================================================================
# CONNECTION AND TENSOR
# ============================================================================

def upper_curvature_bound(n: int) -> float:
    """(36n + 21) / 4, the sectional curvature bound under the scaled metric."""
    return (36 * validate_dimension(n) + 21) / 4


def levi_civita(n: int, m: MetricSpec) -> ConnectionCoefficients:
    """
    Levi-Civita connection of the left-invariant metric ``m``.

    Args:
        n: Complex dimension (n >= 1)
        m: Metric

    Returns:
        ConnectionCoefficients (cached per metric)

    Example:
        >>> conn = levi_civita(2, MetricSpec.scaled(2))
        >>> conn.torsion_residual() < 1e-10
        True
    """
    n = validate_dimension(n)

    def build() -> ConnectionCoefficients:
        cf = frame_structure_constants(n, m)
        # <nabla_a f_b, f_c> = (c_ab^c - c_bc^a + c_ca^b) / 2
        gamma = 0.5 * (cf - cf.transpose(2, 0, 1) + cf.transpose(1, 2, 0))
        logger.debug("Levi-Civita connection for n=%d (%s)", n, m)
        return ConnectionCoefficients(n, m, freeze(gamma))

    return get_cache().get_or_compute(('connection', m), build)


def curvature_tensor(n: int, m: MetricSpec) -> CurvatureTensor:
    """
    Full curvature tensor of the left-invariant metric ``m``.

    Costs O(d0^5) time and O(d0^4) memory; sampling code uses the connection
    directly instead.
    """
    n = validate_dimension(n)

    def build() -> CurvatureTensor:
        gamma = levi_civita(n, m).gamma
        cf = frame_structure_constants(n, m)
        R = (np.einsum('jkm,iml->ijkl', gamma, gamma, optimize=True)
             - np.einsum('ikm,jml->ijkl', gamma, gamma, optimize=True)
             - np.einsum('ijm,mkl->ijkl', cf, gamma, optimize=True))
        logger.info("Curvature tensor for n=%d (%s): %d entries", n, m, R.size)
        return CurvatureTensor(n, m, freeze(R))

    return get_cache().get_or_compute(('curvature', m), build)


def _frame_bracket(cf: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum('...a,...b,abc->...c', x, y, cf)


def _curvature_vectors(n: int, m: MetricSpec, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """R(x, y) z in frame coordinates, batched over leading axes."""
    conn = levi_civita(n, m)
    cf = frame_structure_constants(n, m)
    return (conn.covariant(x, conn.covariant(y, z))
            - conn.covariant(y, conn.covariant(x, z))
            - conn.covariant(_frame_bracket(cf, x, y), z))


def _to_element(n: int, m: MetricSpec, frame_coeffs: np.ndarray) -> AlgebraElement:
    standard = orthonormal_frame(n, m).from_frame(frame_coeffs)
    return reconstruct(RealCoordinates(n, standard))


def curvature_operator(X: AlgebraElement, Y: AlgebraElement, Z: AlgebraElement,
                       m: MetricSpec) -> AlgebraElement:
    """R(X, Y) Z computed from the Koszul connection."""
    if not X.n == Y.n == Z.n:
        raise ShapeError(f"Dimension mismatch: n={X.n}, {Y.n}, {Z.n}")
    x, y, z = (frame_coordinates(W, m) for W in (X, Y, Z))
    return _to_element(X.n, m, _curvature_vectors(X.n, m, x, y, z))


def curvature_form(X: AlgebraElement, Y: AlgebraElement, Z: AlgebraElement,
                   W: AlgebraElement, m: MetricSpec) -> float:
    """<R(X, Y) Z, W>."""
    x, y, z, w = (frame_coordinates(E, m) for E in (X, Y, Z, W))
    return float(_curvature_vectors(X.n, m, x, y, z) @ w)


# ============================================================================
# CLOSED FORMS
# ============================================================================

def _require_part(X: AlgebraElement, part: str, name: str = 'X') -> None:
    coeffs = decompose(X).coeffs
    k_mask, p_mask = part_masks(X.n)
    other = p_mask if part == 'k' else k_mask
    stray = float(np.max(np.abs(coeffs[other]), initial=0.0))
    if stray > TOL_TENSOR * max(1.0, float(np.max(np.abs(coeffs), initial=0.0))):
        raise PreconditionError(
            f"{name} must lie in the {part} part of su({X.n},1)\n"
            f"Found a component of size {stray:.3e} in the other part."
        )


def closed_form_curvature(case: CurvatureCase, A: AlgebraElement, B: AlgebraElement,
                          C: AlgebraElement) -> AlgebraElement:
    """
    Bracket expressions for R on Cartan-homogeneous arguments.

    Cases (U, V, W in k; X, Y, Z in p):
        'UVW': R(U,V)W = 1/4 [[V,U],W]
        'XYZ': R(X,Y)Z = -7/4 [[X,Y],Z]
        'UXY': R(U,X)Y = 1/4 [[X,U],Y] - 1/2 [[Y,U],X]
        'XYV': R(X,Y)V = 3/4 [X,[V,Y]] + 3/4 [Y,[X,V]]

    These hold for every metric in the family (the connection does not
    change when the metric is scaled by a constant).

    Raises:
        InvalidParameterError: Unknown case
        PreconditionError: An argument lies outside the part the case requires
    """
    if case not in CASE_PARTS:
        raise InvalidParameterError(
            f"Unknown curvature case '{case}'. Must be one of: {', '.join(CASE_PARTS)}"
        )
    for element, part, name in zip((A, B, C), CASE_PARTS[case], ('first', 'second', 'third')):
        _require_part(element, part, f"The {name} argument of case {case}")

    if case == 'UVW':
        return 0.25 * bracket(bracket(B, A), C)
    if case == 'XYZ':
        return -1.75 * bracket(bracket(A, B), C)
    if case == 'UXY':
        return 0.25 * bracket(bracket(B, A), C) - 0.5 * bracket(bracket(C, A), B)
    return 0.75 * bracket(A, bracket(C, B)) + 0.75 * bracket(B, bracket(A, C))


# ============================================================================
# SECTIONAL CURVATURE
# ============================================================================

def sectional_curvatures_batch(n: int, planes: np.ndarray, m: MetricSpec) -> np.ndarray:
    """
    Sectional curvatures of many planes at once.

    Args:
        n: Complex dimension
        planes: Array (S, 2, d0) of spanning pairs in frame coordinates
        m: Metric

    Returns:
        Array (S,) of sectional curvatures

    Raises:
        DegeneratePlaneError: If any pair is (numerically) dependent
    """
    planes = np.asarray(planes, dtype=float)
    if planes.ndim != 3 or planes.shape[1:] != (2, real_dimension(n)):
        raise ShapeError(f"planes must have shape (S, 2, {real_dimension(n)}), got {planes.shape}")
    x, y = planes[:, 0], planes[:, 1]
    xx = np.einsum('sa,sa->s', x, x)
    yy = np.einsum('sa,sa->s', y, y)
    xy = np.einsum('sa,sa->s', x, y)
    denominator = xx * yy - xy ** 2
    degenerate = denominator < TOL_DEGENERATE * xx * yy
    if np.any(degenerate):
        raise DegeneratePlaneError(
            f"{int(np.sum(degenerate))} of {len(planes)} planes are degenerate "
            "(spanning vectors are linearly dependent)"
        )
    numerator = np.einsum('sa,sa->s', _curvature_vectors(n, m, x, y, y), x)
    return numerator / denominator


def sectional_curvature(X: AlgebraElement, Y: AlgebraElement, m: MetricSpec) -> float:
    """
    Sectional curvature of the plane spanned by X and Y.

    Raises:
        DegeneratePlaneError: If X and Y are linearly dependent

    Example:
        >>> n = 2; m = MetricSpec.scaled(n)
        >>> sectional_curvature(basis_element(n, 'h', 1), basis_element(n, 'ialpha_p', 1), m)
        0.25
    """
    if X.n != Y.n:
        raise ShapeError(f"Dimension mismatch: n={X.n} vs n={Y.n}")
    plane = np.stack([frame_coordinates(X, m), frame_coordinates(Y, m)])
    return float(sectional_curvatures_batch(X.n, plane[None], m)[0])


def basis_plane_curvatures(n: int, m: Optional[MetricSpec] = None) -> Dict[tuple, float]:
    """Sectional curvature of every plane spanned by two distinct standard basis elements.

    Keys are label pairs. H-H planes are not orthogonal pairs and go through
    the full denominator.
    """
    n = validate_dimension(n)
    m = m or MetricSpec.scaled(n)
    frame = orthonormal_frame(n, m)
    columns = frame.change_of_basis.T
    labels = [index.label for index in basis_indices(n)]
    pairs = list(combinations(range(len(labels)), 2))
    if not pairs:
        return {}
    planes = np.stack([np.stack([columns[i], columns[j]]) for i, j in pairs])
    values = sectional_curvatures_batch(n, planes, m)
    return {(labels[i], labels[j]): float(value) for (i, j), value in zip(pairs, values)}


def basis_plane_max(n: int, m: Optional[MetricSpec] = None) -> float:
    """
    Maximum sectional curvature over planes of standard basis elements.

    Equals 1/4 under the scaled metric, attained at (h_j, i alpha_{j,n+1})
    and (h_j, beta_{j,n+1}).
    """
    return max(basis_plane_curvatures(n, m).values())


def random_planes(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Random orthonormal pairs in frame coordinates, uniform on the frame sphere."""
    dim = real_dimension(n)
    x = rng.standard_normal((count, dim))
    y = rng.standard_normal((count, dim))
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    y -= np.einsum('sa,sa->s', x, y)[:, None] * x
    y /= np.linalg.norm(y, axis=1, keepdims=True)
    return np.stack([x, y], axis=1)


def sample_sectional_curvatures(n: int, trials: int, seed: int,
                                m: Optional[MetricSpec] = None, chunk: int = 2048) -> np.ndarray:
    """Sectional curvatures of ``trials`` seeded random planes."""
    n = validate_dimension(n)
    if isinstance(trials, bool) or not isinstance(trials, (int, np.integer)) or trials < 1:
        raise InvalidParameterError(f"trials must be a positive integer, got {trials!r}")
    m = m or MetricSpec.scaled(n)
    rng = make_rng(seed)
    values = []
    remaining = int(trials)
    while remaining > 0:
        size = min(chunk, remaining)
        values.append(sectional_curvatures_batch(n, random_planes(n, size, rng), m))
        remaining -= size
    return np.concatenate(values)


def sectional_bound_sample(n: int, trials: int = DEFAULT_TRIALS,
                           seed: int = DEFAULT_SEED) -> SectionalBoundSample:
    """
    Check the (36n+21)/4 upper bound on sampled and basis planes (scaled metric).

    Args:
        n: Complex dimension
        trials: Number of random planes (>= 1)
        seed: PRNG seed

    Returns:
        SectionalBoundSample(max_found, bound, within_bound)
    """
    m = MetricSpec.scaled(validate_dimension(n))
    sampled = sample_sectional_curvatures(n, trials, seed, m)
    max_found = max(float(np.max(sampled)), basis_plane_max(n, m))
    bound = upper_curvature_bound(n)
    logger.info("Sectional sweep n=%d: %d planes, max %.6f, bound %.2f", n, trials, max_found, bound)
    return SectionalBoundSample(max_found, bound, max_found <= bound + TOL_SAMPLING)


def mixed_plane_terms(A: AlgebraElement, B: AlgebraElement, m: Optional[MetricSpec] = None) -> MixedPlaneTerms:
    """
    Split <R(A,B)B,A> into the six terms that survive the Cartan grading.

    With A = X + U and B = Y + V the terms are <R(X,Y)Y,X>, <R(U,V)V,U>,
    <R(U,Y)Y,U>, <R(X,V)V,X>, 2<R(X,Y)V,U> and 2<R(X,V)Y,U>; every term
    with an odd number of p arguments vanishes.
    """
    if A.n != B.n:
        raise ShapeError(f"Dimension mismatch: n={A.n} vs n={B.n}")
    n = A.n
    m = m or MetricSpec.scaled(n)
    U, X = cartan_split(A)
    V, Y = cartan_split(B)
    terms = {
        'XYYX': curvature_form(X, Y, Y, X, m),
        'UVVU': curvature_form(U, V, V, U, m),
        'UYYU': curvature_form(U, Y, Y, U, m),
        'XVVX': curvature_form(X, V, V, X, m),
        '2XYVU': 2 * curvature_form(X, Y, V, U, m),
        '2XVYU': 2 * curvature_form(X, V, Y, U, m),
    }
    # <R(X,Y)Y,X> = -7/4 |[X,Y]|^2 is never positive
    bounds = {
        'XYYX': 0.0,
        'UVVU': 0.25,
        'UYYU': 0.25,
        'XVVX': 0.25,
        '2XYVU': 2 * 1.5 * (2 * n + 1),
        '2XVYU': 2 * 0.75 * (2 * n + 1),
    }
    total = curvature_form(A, B, B, A, m)
    return MixedPlaneTerms(n, terms, bounds, total)


# ============================================================================
# COMPLEX STRUCTURE AND THE QUOTIENT
# ============================================================================

def _p_slices(n: int) -> tuple:
    beta = ordinal_of(n, 'beta_p', 1)
    ialpha = ordinal_of(n, 'ialpha_p', 1)
    return slice(beta, beta + n), slice(ialpha, ialpha + n)


def complex_structure(X: AlgebraElement) -> AlgebraElement:
    """
    Complex structure J on p: sum(a_j i alpha_{j,n+1} + b_j beta_{j,n+1})
    maps to sum(-b_j i alpha_{j,n+1} + a_j beta_{j,n+1}).

    Raises:
        PreconditionError: If X has a k component
    """
    _require_part(X, 'p')
    coeffs = decompose(X).coeffs
    beta, ialpha = _p_slices(X.n)
    rotated = np.zeros_like(coeffs)
    rotated[ialpha] = -coeffs[beta]
    rotated[beta] = coeffs[ialpha]
    return reconstruct(RealCoordinates(X.n, rotated))


def holomorphic_bracket_closed_form(X: AlgebraElement) -> AlgebraElement:
    """
    Closed form of [X, JX] for X in p with coefficients a_j (i alpha) and b_j (beta):

        2 { sum_{j<k} [(a_k b_j - a_j b_k) alpha_jk + (a_j a_k + b_j b_k) i beta_jk]
            + sum_j (a_j^2 + b_j^2) h_j }
    """
    _require_part(X, 'p')
    n = X.n
    coeffs = decompose(X).coeffs
    beta, ialpha = _p_slices(n)
    a, b = coeffs[ialpha], coeffs[beta]
    result = np.zeros_like(coeffs)
    for index in basis_indices(n):
        j, k = index.j - 1, index.k - 1
        if index.kind == 'alpha':
            result[index.ordinal] = 2 * (a[k] * b[j] - a[j] * b[k])
        elif index.kind == 'ibeta':
            result[index.ordinal] = 2 * (a[j] * a[k] + b[j] * b[k])
        elif index.kind == 'h':
            result[index.ordinal] = 2 * (a[j] ** 2 + b[j] ** 2)
    return reconstruct(RealCoordinates(n, result))


def quotient_sectional_curvature(X: AlgebraElement, Y: AlgebraElement,
                                 m: Optional[MetricSpec] = None) -> float:
    """
    Base sectional curvature of a horizontal plane via O'Neill's formula.

    X and Y in p are orthonormalised first; then
    K_b = K_t + 3/4 |[X, Y]^vertical|^2, the vertical part being the k part.
    Under the scaled metric the result lies in [-1, -1/4].

    Raises:
        PreconditionError: If X or Y has a k component
        DegeneratePlaneError: If X and Y are dependent
    """
    _require_part(X, 'p', 'X')
    _require_part(Y, 'p', 'Y')
    m = m or MetricSpec.scaled(X.n)
    x_norm = norm(X, m)
    if x_norm == 0.0:
        raise DegeneratePlaneError("X is zero; the plane is degenerate")
    E1 = X / x_norm
    residual = Y - inner_product(Y, E1, m) * E1
    r_norm = norm(residual, m)
    if r_norm ** 2 < TOL_DEGENERATE * inner_product(Y, Y, m):
        raise DegeneratePlaneError("X and Y are linearly dependent")
    E2 = residual / r_norm
    vertical, _ = cartan_split(bracket(E1, E2))
    return sectional_curvature(E1, E2, m) + 0.75 * inner_product(vertical, vertical, m)


def holomorphic_base_curvature(X: AlgebraElement, m: Optional[MetricSpec] = None) -> float:
    """
    Holomorphic sectional curvature K_b(X, JX) of the quotient at a unit X in p.

    Equals -1 for every unit X under the scaled metric.

    Raises:
        PreconditionError: If X has a k component or is not a unit vector

    Example:
        >>> X = 0.5 * basis_element(2, 'beta_p', 1)
        >>> round(holomorphic_base_curvature(X), 12)
        -1.0
    """
    _require_part(X, 'p')
    m = m or MetricSpec.scaled(X.n)
    length = norm(X, m)
    if abs(length - 1.0) > TOL_TENSOR:
        raise PreconditionError(
            f"Holomorphic curvature needs a unit vector; |X| = {length:.12f} under {m}"
        )
    JX = complex_structure(X)
    vertical, _ = cartan_split(bracket(X, JX))
    return sectional_curvature(X, JX, m) + 0.75 * inner_product(vertical, vertical, m)


def random_unit_horizontal(n: int, rng: np.random.Generator, m: Optional[MetricSpec] = None) -> AlgebraElement:
    """Uniform random unit vector of p under the metric (frame sphere)."""
    m = m or MetricSpec.scaled(n)
    _, p_mask = part_masks(n)
    coeffs = rng.standard_normal(real_dimension(n)) * p_mask
    coeffs /= np.linalg.norm(coeffs)
    return _to_element(n, m, coeffs)
