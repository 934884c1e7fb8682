"""
Killing form, canonical metrics and Wang's constants for su(n,1).

The canonical inner product is -B on k, +B on p and zero across the two
parts, where B(X, Y) = tr(ad X ad Y) = 2(n+1) tr(XY). The scaled metric
divides it by n+1.

The Gram matrix is computed, never assumed. In the standard basis it is
diagonal except for the Cartan block: <h_j, h_k> = 2(n+1) * scale for
j != k because tr(h_j h_k) = -1. :func:`gram_discrepancies` lists those
entries; everything downstream works in the orthonormal frame of
:func:`orthonormal_frame`, whose H block comes from the closed-form
eigenbasis of I + 11^T.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, NamedTuple, Tuple

import numpy as np

from .config import DEFAULT_SAMPLES, DEFAULT_SEED, TOL_EXACT
from .exceptions import InvalidParameterError, ShapeError
from .su_algebra import (
    AlgebraElement,
    RealCoordinates,
    ad_matrix,
    basis_indices,
    basis_stack,
    cartan_split,
    decompose,
    h_slice,
    part_masks,
    real_dimension,
    structure_constants,
    validate_dimension,
)
from .utils import freeze, get_cache, make_rng

logger = logging.getLogger(__name__)

MetricVariant = Literal['canonical', 'scaled']


@dataclass(frozen=True)
class MetricSpec:
    """Which left-invariant inner product is in force.

    ``factor`` multiplies the base scale (1 for canonical, 1/(n+1) for
    scaled); it exists for scale-covariance checks and defaults to 1.
    """
    variant: MetricVariant
    n: int
    factor: float = 1.0

    def __post_init__(self) -> None:
        if self.variant not in ('canonical', 'scaled'):
            raise InvalidParameterError(
                f"Invalid metric variant '{self.variant}'. Must be 'canonical' or 'scaled'."
            )
        validate_dimension(self.n)
        if not self.factor > 0:
            raise InvalidParameterError(f"Metric factor must be positive, got {self.factor}")

    @classmethod
    def canonical(cls, n: int) -> 'MetricSpec':
        return cls('canonical', n)

    @classmethod
    def scaled(cls, n: int) -> 'MetricSpec':
        return cls('scaled', n)

    @property
    def scale(self) -> float:
        base = 1.0 if self.variant == 'canonical' else 1.0 / (self.n + 1)
        return base * self.factor

    def rescaled(self, factor: float) -> 'MetricSpec':
        """Same variant with the scale multiplied by ``factor``."""
        return MetricSpec(self.variant, self.n, self.factor * factor)

    def __str__(self) -> str:
        suffix = '' if self.factor == 1.0 else f"x{self.factor:g}"
        return f"{self.variant}{suffix}"


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Gram matrix of the standard basis under a metric."""
    n: int
    metric: MetricSpec
    entries: np.ndarray = field(repr=False)


@dataclass(frozen=True, eq=False)
class OrthonormalFrame:
    """Orthonormal frame of su(n,1) under a metric.

    ``vectors`` has the frame vectors as columns in standard coordinates;
    ``change_of_basis`` maps standard coordinates to frame coordinates
    (it is the inverse of ``vectors``).
    """
    n: int
    metric: MetricSpec
    vectors: np.ndarray = field(repr=False)
    change_of_basis: np.ndarray = field(repr=False)

    @property
    def frame(self) -> List[RealCoordinates]:
        return [RealCoordinates(self.n, column) for column in self.vectors.T]

    def to_frame(self, coeffs: np.ndarray) -> np.ndarray:
        """Standard coordinates (last axis) to frame coordinates."""
        return coeffs @ self.change_of_basis.T

    def from_frame(self, coeffs: np.ndarray) -> np.ndarray:
        """Frame coordinates (last axis) to standard coordinates."""
        return coeffs @ self.vectors.T


class WangConstants(NamedTuple):
    """Suprema of the ad operator norm over unit p vectors (C1) and unit k vectors (C2)."""
    C1: float
    C2: float


def _check_metric(n: int, m: MetricSpec) -> None:
    if m.n != n:
        raise ShapeError(f"Metric is defined for n={m.n}, operation uses n={n}")


# ============================================================================
# KILLING FORM AND INNER PRODUCT
# ============================================================================

def killing_form(X: AlgebraElement, Y: AlgebraElement) -> float:
    """
    Killing form B(X, Y) = tr(ad X o ad Y), from the structure constants.

    Raises:
        ShapeError: If X and Y have different n
        MembershipError: If either is not in su(n,1)
    """
    if X.n != Y.n:
        raise ShapeError(f"Dimension mismatch: n={X.n} vs n={Y.n}")
    return float(np.trace(ad_matrix(X) @ ad_matrix(Y)))


def killing_form_closed(X: AlgebraElement, Y: AlgebraElement) -> float:
    """Closed form B(X, Y) = 2(n+1) tr(XY)."""
    if X.n != Y.n:
        raise ShapeError(f"Dimension mismatch: n={X.n} vs n={Y.n}")
    return float(2 * (X.n + 1) * np.trace(X.entries @ Y.entries).real)


def inner_product(X: AlgebraElement, Y: AlgebraElement, m: MetricSpec) -> float:
    """
    Metric inner product: scale * (-B on k, +B on p, 0 across parts).

    Example:
        >>> h1 = basis_element(2, 'h', 1)
        >>> inner_product(h1, h1, MetricSpec.canonical(2))
        12.0
    """
    _check_metric(X.n, m)
    x_k, x_p = cartan_split(X)
    y_k, y_p = cartan_split(Y)
    return m.scale * (-killing_form_closed(x_k, y_k) + killing_form_closed(x_p, y_p))


def norm(X: AlgebraElement, m: MetricSpec) -> float:
    return float(np.sqrt(max(inner_product(X, X, m), 0.0)))


def gram_matrix(n: int, m: MetricSpec) -> GramMatrix:
    """
    Gram matrix of the standard basis.

    Diagonal entries are 4(n+1) * scale. Off-diagonal entries vanish except
    for (h_j, h_k), j != k, which equal 2(n+1) * scale.
    """
    n = validate_dimension(n)
    _check_metric(n, m)

    def build() -> GramMatrix:
        stack = basis_stack(n)
        traces = np.einsum('iab,jba->ij', stack, stack).real
        k_mask, _ = part_masks(n)
        same_part = np.equal.outer(k_mask, k_mask)
        sign = np.where(k_mask, -1.0, 1.0)
        entries = np.where(same_part, sign[:, None] * 2 * (n + 1) * traces, 0.0) * m.scale
        return GramMatrix(n, m, freeze(entries))

    return get_cache().get_or_compute(('gram', m), build)


def gram_discrepancies(n: int, m: MetricSpec) -> List[Dict[str, object]]:
    """
    Gram entries that differ from "4n+4 on the diagonal, 0 otherwise" (times scale).

    Returns:
        One dict per offending entry (upper triangle only), with labels,
        the computed value and the claimed value
    """
    gram = gram_matrix(n, m).entries
    labels = [index.label for index in basis_indices(n)]
    claimed_diagonal = 4 * (n + 1) * m.scale
    found = []
    for i in range(gram.shape[0]):
        for j in range(i, gram.shape[0]):
            claimed = claimed_diagonal if i == j else 0.0
            if abs(gram[i, j] - claimed) > TOL_EXACT:
                found.append({
                    'row': labels[i],
                    'col': labels[j],
                    'computed': float(gram[i, j]),
                    'claimed': claimed,
                })
    return found


# ============================================================================
# ORTHONORMAL FRAME
# ============================================================================

def _cartan_block_frame(n: int, off_diagonal: float) -> np.ndarray:
    """Orthonormal frame for the H block with Gram c(I + 11^T), columns in h coordinates.

    First column: the all-ones direction (eigenvalue c(n+1)); the rest:
    normalised Helmert vectors spanning its complement (eigenvalue c).
    """
    c = off_diagonal
    block = np.zeros((n, n))
    block[:, 0] = 1.0 / np.sqrt(n) / np.sqrt(c * (n + 1))
    for k in range(1, n):
        helmert = np.zeros(n)
        helmert[:k] = 1.0
        helmert[k] = -float(k)
        block[:, k] = helmert / np.sqrt(k * (k + 1)) / np.sqrt(c)
    return block


def orthonormal_frame(n: int, m: MetricSpec) -> OrthonormalFrame:
    """
    Orthonormal frame of su(n,1) under the metric ``m``.

    Non-Cartan basis vectors are rescaled; the Cartan block is orthogonalised
    by the closed-form eigenbasis of I + 11^T. The frame keeps the k/p split.

    Returns:
        OrthonormalFrame with the frame vectors and the change of basis
    """
    n = validate_dimension(n)
    _check_metric(n, m)

    def build() -> OrthonormalFrame:
        gram = gram_matrix(n, m).entries
        dim = real_dimension(n)
        vectors = np.diag(1.0 / np.sqrt(np.diag(gram)))
        block = h_slice(n)
        vectors[block, block] = _cartan_block_frame(n, 2 * (n + 1) * m.scale)
        change_of_basis = vectors.T @ gram
        residual = float(np.max(np.abs(change_of_basis @ vectors - np.eye(dim))))
        if residual > TOL_EXACT:
            logger.warning("Orthonormal frame residual %.3e for n=%d (%s)", residual, n, m)
        logger.debug("Built orthonormal frame for n=%d (%s), residual %.2e", n, m, residual)
        return OrthonormalFrame(n, m, freeze(vectors), freeze(change_of_basis))

    return get_cache().get_or_compute(('frame', m), build)


def frame_structure_constants(n: int, m: MetricSpec) -> np.ndarray:
    """Structure constants in the orthonormal frame: [f_a, f_b] = sum_c cf[a, b, c] f_c."""
    n = validate_dimension(n)
    _check_metric(n, m)

    def build() -> np.ndarray:
        frame = orthonormal_frame(n, m)
        c = structure_constants(n).c.astype(float)
        F, C = frame.vectors, frame.change_of_basis
        return freeze(np.einsum('ia,jb,ijk,ck->abc', F, F, c, C, optimize=True))

    return get_cache().get_or_compute(('frame_constants', m), build)


def frame_coordinates(X: AlgebraElement, m: MetricSpec) -> np.ndarray:
    """Coordinates of X in the orthonormal frame of ``m``."""
    _check_metric(X.n, m)
    return orthonormal_frame(X.n, m).to_frame(decompose(X).coeffs)


def frame_part_masks(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """k/p masks over frame indices (identical to the standard ones)."""
    return part_masks(n)


# ============================================================================
# OPERATOR NORMS AND WANG CONSTANTS
# ============================================================================

def _ad_frame_matrices(cf: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Matrices of ad x in frame coordinates; x may be a batch (S, d)."""
    return np.einsum('...a,abc->...cb', x, cf)


def ad_operator_norm(X: AlgebraElement, m: MetricSpec) -> float:
    """
    N(ad X) = sup{ ||[X, Y]|| : ||Y|| = 1 }, the largest singular value of
    ad X in an orthonormal frame.
    """
    cf = frame_structure_constants(X.n, m)
    matrix = _ad_frame_matrices(cf, frame_coordinates(X, m))
    return float(np.linalg.norm(matrix, ord=2))


def _polish(cf: np.ndarray, mask: np.ndarray, start: np.ndarray, iterations: int = 60) -> Tuple[float, np.ndarray]:
    """Projected gradient ascent of the ad operator norm on the unit sphere of a part."""
    x = start / np.linalg.norm(start)
    value = float(np.linalg.norm(_ad_frame_matrices(cf, x), ord=2))
    step = 0.5
    for _ in range(iterations):
        u, _, vt = np.linalg.svd(_ad_frame_matrices(cf, x))
        gradient = np.einsum('c,acb,b->a', u[:, 0], cf, vt[0]) * mask
        gradient -= (gradient @ x) * x
        if np.linalg.norm(gradient) < 1e-14:
            break
        while step > 1e-8:
            candidate = x + step * gradient
            candidate /= np.linalg.norm(candidate)
            candidate_value = float(np.linalg.norm(_ad_frame_matrices(cf, candidate), ord=2))
            if candidate_value > value:
                x, value = candidate, candidate_value
                break
            step /= 2
        else:
            break
    return value, x


def wang_constants(n: int, m: MetricSpec, samples: int = DEFAULT_SAMPLES,
                   seed: int = DEFAULT_SEED) -> WangConstants:
    """
    Wang's constants C1 (sup over unit p vectors) and C2 (sup over unit k vectors).

    The inner sup is an exact operator norm; the outer sup is searched over
    every frame vector, ``samples`` seeded random unit vectors per part, and
    a projected-gradient polish of the best candidates. The result is a
    lower bound on the true supremum.

    Args:
        n: Complex dimension
        m: Metric
        samples: Random unit vectors per part (>= 1)
        seed: PRNG seed

    Returns:
        WangConstants(C1, C2)

    Raises:
        InvalidParameterError: If samples < 1 or the seed is invalid
    """
    n = validate_dimension(n)
    if isinstance(samples, bool) or not isinstance(samples, (int, np.integer)) or samples < 1:
        raise InvalidParameterError(f"samples must be a positive integer, got {samples!r}")
    rng = make_rng(seed)
    cf = frame_structure_constants(n, m)
    k_mask, p_mask = frame_part_masks(n)
    dim = real_dimension(n)

    results = {}
    for name, mask in (('C1', p_mask), ('C2', k_mask)):
        axis_vectors = np.eye(dim)[mask]
        random_vectors = rng.standard_normal((samples, dim)) * mask
        random_vectors /= np.linalg.norm(random_vectors, axis=1, keepdims=True)
        candidates = np.vstack([axis_vectors, random_vectors])
        norms = np.linalg.norm(_ad_frame_matrices(cf, candidates), ord=2, axis=(1, 2))
        best = float(np.max(norms))
        for index in np.argsort(norms)[-3:]:
            polished, _ = _polish(cf, mask.astype(float), candidates[index])
            best = max(best, polished)
        results[name] = best
        logger.debug("%s for n=%d (%s): %.12f over %d candidates", name, n, m, best, len(candidates))
    return WangConstants(results['C1'], results['C2'])


def cartan_ad_rayleigh_bound(n: int, m: MetricSpec) -> float:
    """
    Closed-form sup of N(ad h) over unit h in the Cartan block span{h_j}.

    For h = sum d_s h_s the eigenvalues of ad h are d_j - d_k and
    d_j + sum(d), and ||h||^2 = 2(n+1) * scale * d^T (I + 11^T) d, so the
    sup is a Rayleigh quotient of v v^T against I + 11^T. Gives 1 under the
    scaled metric and (n+1)^(-1/2) under the canonical one.
    """
    n = validate_dimension(n)
    _check_metric(n, m)
    inverse = np.eye(n) - np.ones((n, n)) / (n + 1)
    candidates = [np.eye(n)[j] + np.ones(n) for j in range(n)]
    candidates += [np.eye(n)[j] - np.eye(n)[k] for j in range(n) for k in range(j + 1, n)]
    best = max(float(v @ inverse @ v) for v in candidates)
    return float(np.sqrt(best / (2 * (n + 1) * m.scale)))
