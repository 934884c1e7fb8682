"""
The Lie algebra su(n,1) in its standard basis.

Elements are (n+1)x(n+1) complex matrices X with J X* J = -X and tr X = 0,
where J = diag(1, ..., 1, -1). The standard basis consists of

    alpha_jk,  i beta_jk      1 <= j < k <= n      (k part)
    h_j                       1 <= j <= n          (k part)
    beta_{j,n+1}, i alpha_{j,n+1}   1 <= j <= n    (p part)

with alpha_jk = e_jk - e_kj, beta_jk = e_jk + e_kj, h_j = i(e_jj - e_{n+1,n+1}).
Basis matrices have Gaussian-integer entries, so every bracket of basis
elements is computed exactly in floating point and the structure constants
are exact integers.

Canonical ordering: all alpha_jk (lexicographic), all i beta_jk, h_1..h_n,
beta_{1,n+1}..beta_{n,n+1}, i alpha_{1,n+1}..i alpha_{n,n+1}.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Literal, Optional, Sequence, Tuple, Union

import numpy as np

from .config import TOL_MEMBERSHIP
from .exceptions import InvalidParameterError, MembershipError, ShapeError
from .utils import freeze, get_cache

logger = logging.getLogger(__name__)

# Type aliases
BasisKind = Literal['alpha', 'ibeta', 'h', 'beta_p', 'ialpha_p']
Scalar = Union[int, float, complex]

K_KINDS = ('alpha', 'ibeta', 'h')
P_KINDS = ('beta_p', 'ialpha_p')


def validate_dimension(n: int) -> int:
    """Validate the complex dimension parameter n.

    Raises:
        InvalidParameterError: If n is not a positive integer
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(
            f"Invalid dimension n={n!r}.\n\n"
            "n is the complex dimension of the hyperbolic space and must be a "
            "positive integer (n >= 1)."
        )
    return int(n)


def real_dimension(n: int) -> int:
    """Real dimension n^2 + 2n of su(n,1)."""
    n = validate_dimension(n)
    return n * n + 2 * n


# ============================================================================
# DOMAIN TYPES
# ============================================================================

@dataclass(frozen=True)
class BasisIndex:
    """Position of one standard basis element.

    ``j`` and ``k`` are 1-based; ``k`` is 0 for the single-index kinds.
    """
    kind: BasisKind
    j: int
    k: int
    ordinal: int

    @property
    def in_k(self) -> bool:
        return self.kind in K_KINDS

    @property
    def in_p(self) -> bool:
        return self.kind in P_KINDS

    @property
    def label(self) -> str:
        if self.kind in ('alpha', 'ibeta'):
            return f"{self.kind}_{self.j}_{self.k}"
        if self.kind == 'h':
            return f"h_{self.j}"
        # p-part labels carry the n+1 column explicitly
        return f"{self.kind[:-2]}_{self.j}_{self.k}"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """An (n+1)x(n+1) complex matrix, normally an element of su(n,1).

    Supports the vector-space operations (+, -, scalar *) so elements can be
    combined the way they are written on paper: ``3 * a12 - 2 * ia13``.
    """
    n: int
    entries: np.ndarray = field(repr=False)

    # numpy scalars defer to __rmul__ instead of broadcasting
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        validate_dimension(self.n)
        matrix = np.array(self.entries, dtype=complex)
        size = self.n + 1
        if matrix.shape != (size, size):
            raise ShapeError(
                f"Expected a {size}x{size} matrix for n={self.n}, got shape {matrix.shape}"
            )
        object.__setattr__(self, 'entries', freeze(matrix))

    @classmethod
    def from_matrix(cls, matrix: Union[np.ndarray, Sequence[Sequence[Scalar]]]) -> 'AlgebraElement':
        """Wrap a square matrix, inferring n from its size."""
        array = np.asarray(matrix, dtype=complex)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 2:
            raise ShapeError(f"Expected a square matrix of size >= 2, got shape {array.shape}")
        return cls(array.shape[0] - 1, array)

    @classmethod
    def zero(cls, n: int) -> 'AlgebraElement':
        return cls(n, np.zeros((n + 1, n + 1), dtype=complex))

    def _check_same(self, other: 'AlgebraElement') -> None:
        if not isinstance(other, AlgebraElement):
            raise ShapeError(f"Expected an AlgebraElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ShapeError(f"Dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check_same(other)
        return AlgebraElement(self.n, self.entries + other.entries)

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check_same(other)
        return AlgebraElement(self.n, self.entries - other.entries)

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.n, -self.entries)

    def __mul__(self, scalar: Scalar) -> 'AlgebraElement':
        if isinstance(scalar, AlgebraElement):
            return NotImplemented
        return AlgebraElement(self.n, self.entries * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> 'AlgebraElement':
        return AlgebraElement(self.n, self.entries / scalar)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.n, self.entries.tobytes()))

    def allclose(self, other: 'AlgebraElement', atol: float = 1e-12) -> bool:
        self._check_same(other)
        return bool(np.allclose(self.entries, other.entries, rtol=0.0, atol=atol))

    def is_zero(self, atol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.entries) <= atol))


@dataclass(frozen=True, eq=False)
class RealCoordinates:
    """Real coefficients of an element of su(n,1) in the standard basis."""
    n: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        validate_dimension(self.n)
        values = np.array(self.coeffs, dtype=float)
        if values.shape != (real_dimension(self.n),):
            raise ShapeError(
                f"Expected {real_dimension(self.n)} coefficients for n={self.n}, "
                f"got shape {values.shape}"
            )
        object.__setattr__(self, 'coeffs', freeze(values))

    def __getitem__(self, index: int) -> float:
        return float(self.coeffs[index])

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Integer structure constants: [e_i, e_j] = sum_k c[i, j, k] e_k."""
    n: int
    c: np.ndarray = field(repr=False)

    @property
    def dimension(self) -> int:
        return int(self.c.shape[0])


# ============================================================================
# MATRIX BUILDERS (1-based indices, size N = n+1)
# ============================================================================

def unit_matrix(j: int, k: int, size: int) -> np.ndarray:
    """e_jk: 1 in position (j, k), zero elsewhere."""
    matrix = np.zeros((size, size), dtype=complex)
    matrix[j - 1, k - 1] = 1
    return matrix


def alpha_matrix(j: int, k: int, size: int) -> np.ndarray:
    """alpha_jk = e_jk - e_kj (zero when j == k)."""
    return unit_matrix(j, k, size) - unit_matrix(k, j, size)


def beta_matrix(j: int, k: int, size: int) -> np.ndarray:
    """beta_jk = e_jk + e_kj (2 e_jj when j == k)."""
    return unit_matrix(j, k, size) + unit_matrix(k, j, size)


def h_matrix(j: int, size: int) -> np.ndarray:
    """h_j = i(e_jj - e_{n+1,n+1})."""
    return 1j * (unit_matrix(j, j, size) - unit_matrix(size, size, size))


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def basis_indices(n: int) -> Tuple[BasisIndex, ...]:
    """Standard basis indices of su(n,1) in canonical order."""
    n = validate_dimension(n)
    pairs = _pairs(n)
    specs: List[Tuple[BasisKind, int, int]] = []
    specs += [('alpha', j, k) for j, k in pairs]
    specs += [('ibeta', j, k) for j, k in pairs]
    specs += [('h', j, 0) for j in range(1, n + 1)]
    specs += [('beta_p', j, n + 1) for j in range(1, n + 1)]
    specs += [('ialpha_p', j, n + 1) for j in range(1, n + 1)]
    return tuple(BasisIndex(kind, j, k, ordinal) for ordinal, (kind, j, k) in enumerate(specs))


def basis_labels(n: int) -> List[str]:
    """Readable labels of the standard basis in canonical order."""
    return [index.label for index in basis_indices(n)]


def ordinal_of(n: int, kind: BasisKind, j: int, k: int = 0) -> int:
    """Canonical ordinal of a basis element.

    For the p kinds ``k`` may be omitted (it is always n+1).
    """
    for index in basis_indices(n):
        if index.kind == kind and index.j == j and (index.k == k or (k == 0 and index.in_p)):
            return index.ordinal
    raise InvalidParameterError(f"No basis element {kind}({j},{k}) for n={n}")


def _basis_matrix(index: BasisIndex, size: int) -> np.ndarray:
    if index.kind == 'alpha':
        return alpha_matrix(index.j, index.k, size)
    if index.kind == 'ibeta':
        return 1j * beta_matrix(index.j, index.k, size)
    if index.kind == 'h':
        return h_matrix(index.j, size)
    if index.kind == 'beta_p':
        return beta_matrix(index.j, size, size)
    return 1j * alpha_matrix(index.j, size, size)


def basis_stack(n: int) -> np.ndarray:
    """Standard basis as a read-only (d0, n+1, n+1) complex array."""
    n = validate_dimension(n)

    def build() -> np.ndarray:
        size = n + 1
        return freeze(np.stack([_basis_matrix(index, size) for index in basis_indices(n)]))

    return get_cache().get_or_compute(('basis_stack', n), build)


def standard_basis(n: int) -> List[AlgebraElement]:
    """
    Standard basis of su(n,1).

    Args:
        n: Complex dimension (n >= 1)

    Returns:
        n^2 + 2n elements in canonical order, with Gaussian-integer entries

    Raises:
        InvalidParameterError: If n < 1

    Example:
        >>> [b.n for b in standard_basis(1)]
        [1, 1, 1]
    """
    return [AlgebraElement(n, matrix) for matrix in basis_stack(n)]


def basis_element(n: int, kind: BasisKind, j: int, k: int = 0) -> AlgebraElement:
    """Single standard basis element, e.g. ``basis_element(2, 'beta_p', 1)``."""
    return AlgebraElement(n, basis_stack(n)[ordinal_of(n, kind, j, k)])


def part_masks(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Boolean masks over ordinals for the k part and the p part."""
    indices = basis_indices(n)
    k_mask = np.array([index.in_k for index in indices])
    return k_mask, ~k_mask


def h_slice(n: int) -> slice:
    """Ordinal range of the H block."""
    start = n * (n - 1)
    return slice(start, start + n)


# ============================================================================
# MEMBERSHIP, BRACKET, COORDINATES
# ============================================================================

def _signature(n: int) -> np.ndarray:
    return np.diag([1.0] * n + [-1.0]).astype(complex)


def membership_residuals(M: AlgebraElement) -> Tuple[float, float]:
    """Return (max |J M* J + M|, |tr M|)."""
    J = _signature(M.n)
    hermitian = float(np.max(np.abs(J @ M.entries.conj().T @ J + M.entries)))
    trace = float(abs(np.trace(M.entries)))
    return hermitian, trace


def _is_gaussian_integer(matrix: np.ndarray) -> bool:
    return bool(np.all(matrix.real == np.round(matrix.real)) and
                np.all(matrix.imag == np.round(matrix.imag)))


def check_membership(M: AlgebraElement, tol: float = TOL_MEMBERSHIP) -> None:
    """
    Check that M lies in su(n,1).

    Gaussian-integer matrices are checked exactly; float matrices within
    ``tol`` scaled by the size of their entries.

    Raises:
        MembershipError: With the violated condition
    """
    hermitian, trace = membership_residuals(M)
    if _is_gaussian_integer(M.entries):
        limit = 0.0
    else:
        limit = tol * max(1.0, float(np.max(np.abs(M.entries))))
    if hermitian > limit:
        raise MembershipError(
            f"Matrix is not in su({M.n},1): J M* J + M has residual {hermitian:.3e} "
            f"(allowed {limit:.1e}).",
            condition='J M* J = -M',
        )
    if trace > limit:
        raise MembershipError(
            f"Matrix is not in su({M.n},1): trace is {trace:.3e} (allowed {limit:.1e}).",
            condition='tr M = 0',
        )


def is_member(M: AlgebraElement, tol: float = TOL_MEMBERSHIP) -> bool:
    try:
        check_membership(M, tol)
    except MembershipError:
        return False
    return True


def bracket(X: AlgebraElement, Y: AlgebraElement) -> AlgebraElement:
    """
    Lie bracket [X, Y] = XY - YX.

    Raises:
        ShapeError: If X and Y have different dimension parameters
    """
    if X.n != Y.n:
        raise ShapeError(f"Cannot bracket elements with n={X.n} and n={Y.n}")
    return AlgebraElement(X.n, X.entries @ Y.entries - Y.entries @ X.entries)


def _coords_from_entries(n: int, entries: np.ndarray) -> np.ndarray:
    """Closed-form coordinate extraction on (..., n+1, n+1) arrays."""
    rows, cols = np.triu_indices(n, k=1)
    upper = entries[..., rows, cols]
    diagonal = np.diagonal(entries, axis1=-2, axis2=-1)[..., :n]
    last_column = entries[..., :n, n]
    return np.concatenate([
        upper.real,          # alpha_jk
        upper.imag,          # i beta_jk
        diagonal.imag,       # h_j
        last_column.real,    # beta_{j,n+1}
        last_column.imag,    # i alpha_{j,n+1}
    ], axis=-1)


def decompose(M: AlgebraElement) -> RealCoordinates:
    """
    Coordinates of M in the standard basis.

    Read directly off the matrix: off-diagonal real/imaginary parts give the
    alpha/i beta pairs, the last column gives the p coefficients and the
    imaginary diagonal gives the h coefficients.

    Raises:
        MembershipError: If M is not in su(n,1)
    """
    check_membership(M)
    return RealCoordinates(M.n, _coords_from_entries(M.n, M.entries))


def reconstruct(coords: Union[RealCoordinates, Tuple[int, Sequence[float]]]) -> AlgebraElement:
    """Inverse of :func:`decompose`."""
    if not isinstance(coords, RealCoordinates):
        coords = RealCoordinates(coords[0], np.asarray(coords[1], dtype=float))
    entries = np.tensordot(coords.coeffs, basis_stack(coords.n), axes=1)
    return AlgebraElement(coords.n, entries)


def cartan_split(M: AlgebraElement) -> Tuple[AlgebraElement, AlgebraElement]:
    """
    Split M into its k part and p part.

    Returns:
        (k_part, p_part) with k_part + p_part = M

    Raises:
        MembershipError: If M is not in su(n,1)
    """
    coords = decompose(M).coeffs
    k_mask, p_mask = part_masks(M.n)
    k_part = reconstruct(RealCoordinates(M.n, np.where(k_mask, coords, 0.0)))
    p_part = reconstruct(RealCoordinates(M.n, np.where(p_mask, coords, 0.0)))
    return k_part, p_part


# ============================================================================
# STRUCTURE CONSTANTS
# ============================================================================

def structure_constants(n: int) -> StructureConstants:
    """
    Integer structure constants of su(n,1) in the standard basis.

    Brackets of basis matrices are Gaussian-integer matrices, so the
    coefficients read off by :func:`decompose` are exact integers; any
    non-integer value would indicate a construction error and is rejected.

    Args:
        n: Complex dimension (n >= 1)

    Returns:
        StructureConstants with c[i, j, k] the e_k coefficient of [e_i, e_j]
    """
    n = validate_dimension(n)

    def build() -> StructureConstants:
        logger.debug("Building structure constants for su(%d,1)", n)
        stack = basis_stack(n)
        products = np.einsum('iab,jbc->ijac', stack, stack)
        brackets = products - np.swapaxes(products, 0, 1)
        raw = _coords_from_entries(n, brackets)
        constants = np.rint(raw)
        if not np.array_equal(constants, raw):
            raise ArithmeticError("Structure constants of su(n,1) must be integers")
        return StructureConstants(n, freeze(constants.astype(np.int64)))

    return get_cache().get_or_compute(('structure_constants', n), build)


def jacobi_residual(constants: StructureConstants) -> int:
    """Maximum absolute Jacobi residual, computed in integer arithmetic."""
    c = constants.c
    total = (np.einsum('ijm,mkl->ijkl', c, c)
             + np.einsum('jkm,mil->ijkl', c, c)
             + np.einsum('kim,mjl->ijkl', c, c))
    return int(np.max(np.abs(total))) if total.size else 0


def ad_matrix(X: AlgebraElement) -> np.ndarray:
    """Matrix of ad X in standard coordinates: column j holds the coordinates of [X, e_j]."""
    coeffs = decompose(X).coeffs
    return np.einsum('i,ijk->kj', coeffs, structure_constants(X.n).c)


# ============================================================================
# BRACKET TABLE
# ============================================================================

@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of checking one bracket identity over all admissible indices."""
    identity: str
    instances: int
    failures: int
    worst_residual: float

    @property
    def skipped(self) -> bool:
        return self.instances == 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            'identity': self.identity,
            'instances': self.instances,
            'failures': self.failures,
            'worst_residual': self.worst_residual,
            'skipped': self.skipped,
        }


@dataclass(frozen=True)
class BracketTableReport:
    """Per-identity results of :func:`verify_bracket_table`."""
    n: int
    checks: Tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> int:
        return sum(check.failures for check in self.checks)

    def to_list(self) -> List[Dict[str, object]]:
        return [check.to_dict() for check in self.checks]


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


_Identity = Tuple[str, Callable[[int], Iterable[Tuple[int, ...]]],
                  Callable[[Tuple[int, ...], int], Tuple[np.ndarray, np.ndarray, np.ndarray]]]


def _bracket_identities() -> List[_Identity]:
    """The fifteen bracket identities as (name, index generator, (X, Y, rhs) builder)."""
    A, B, E, H = alpha_matrix, beta_matrix, unit_matrix, h_matrix
    d = _delta

    def pair_pair(n: int) -> Iterable[Tuple[int, ...]]:
        return [p + q for p, q in itertools.product(_pairs(n), _pairs(n))]

    def pair_single(n: int) -> Iterable[Tuple[int, ...]]:
        return [p + (l,) for p in _pairs(n) for l in range(1, n + 1)]

    def single_single(n: int) -> Iterable[Tuple[int, ...]]:
        return list(itertools.product(range(1, n + 1), repeat=2))

    def eq1(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l, m = ix
        rhs = d(k, l) * A(j, m, N) + d(k, m) * A(l, j, N) + d(j, m) * A(k, l, N) + d(l, j) * A(m, k, N)
        return A(j, k, N), A(l, m, N), rhs

    def eq2(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l, m = ix
        rhs = -(d(k, l) * A(j, m, N) + d(k, m) * A(j, l, N) + d(j, m) * A(k, l, N) + d(l, j) * A(k, m, N))
        return 1j * B(j, k, N), 1j * B(l, m, N), rhs

    def eq3(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k = ix
        return H(j, N), H(k, N), np.zeros((N, N), dtype=complex)

    def eq4(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l, m = ix
        rhs = 1j * (d(k, l) * B(j, m, N) + d(k, m) * B(j, l, N) - d(j, m) * B(k, l, N) - d(l, j) * B(k, m, N))
        return A(j, k, N), 1j * B(l, m, N), rhs

    def eq5(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return A(j, k, N), H(l, N), 1j * (d(k, l) * B(j, l, N) - d(l, j) * B(k, l, N))

    def eq6(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return H(l, N), 1j * B(j, k, N), d(k, l) * A(j, l, N) + d(l, j) * A(k, l, N)

    def eq7(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return A(j, k, N), B(l, N, N), d(l, k) * B(j, N, N) - d(j, l) * B(k, N, N)

    def eq8(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return A(j, k, N), 1j * A(l, N, N), 1j * (d(k, l) * A(j, N, N) - d(l, j) * A(k, N, N))

    def eq9(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return 1j * B(j, k, N), B(l, N, N), 1j * (d(l, k) * A(j, N, N) + d(j, l) * A(k, N, N))

    def eq10(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k, l = ix
        return 1j * B(j, k, N), 1j * A(l, N, N), -(d(l, k) * B(j, N, N) + d(j, l) * B(k, N, N))

    def eq11(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, l = ix
        return H(j, N), B(l, N, N), 1j * (d(j, l) * A(j, N, N) + A(l, N, N))

    def eq12(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, l = ix
        return H(j, N), 1j * A(l, N, N), -(d(j, l) * B(j, N, N) + B(l, N, N))

    def eq13(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k = ix
        return B(j, N, N), B(k, N, N), A(j, k, N)

    def eq14(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k = ix
        return 1j * A(j, N, N), 1j * A(k, N, N), A(j, k, N)

    def eq15(ix: Tuple[int, ...], N: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        j, k = ix
        return 1j * A(j, N, N), B(k, N, N), 1j * (B(j, k, N) - 2 * d(j, k) * E(N, N, N))

    return [
        ('(1) [alpha_jk, alpha_lm]', pair_pair, eq1),
        ('(2) [i beta_jk, i beta_lm]', pair_pair, eq2),
        ('(3) [h_j, h_k]', single_single, eq3),
        ('(4) [alpha_jk, i beta_lm]', pair_pair, eq4),
        ('(5) [alpha_jk, h_l]', pair_single, eq5),
        ('(6) [h_l, i beta_jk]', pair_single, eq6),
        ('(7) [alpha_jk, beta_l,n+1]', pair_single, eq7),
        ('(8) [alpha_jk, i alpha_l,n+1]', pair_single, eq8),
        ('(9) [i beta_jk, beta_l,n+1]', pair_single, eq9),
        ('(10) [i beta_jk, i alpha_l,n+1]', pair_single, eq10),
        ('(11) [h_j, beta_l,n+1]', single_single, eq11),
        ('(12) [h_j, i alpha_l,n+1]', single_single, eq12),
        ('(13) [beta_j,n+1, beta_k,n+1]', single_single, eq13),
        ('(14) [i alpha_j,n+1, i alpha_k,n+1]', single_single, eq14),
        ('(15) [i alpha_j,n+1, beta_k,n+1]', single_single, eq15),
    ]


def verify_bracket_table(n: int) -> BracketTableReport:
    """
    Check the fifteen bracket identities of su(n,1) by exact matrix arithmetic.

    Identities quantified over pairs j < k are vacuous at n = 1 and are
    reported with zero instances (skipped). Failures are report entries.

    Args:
        n: Complex dimension (n >= 1)

    Returns:
        BracketTableReport with one IdentityCheck per identity
    """
    n = validate_dimension(n)
    size = n + 1
    checks = []
    for name, indices, build in _bracket_identities():
        instances = failures = 0
        worst = 0.0
        for ix in indices(n):
            X, Y, rhs = build(ix, size)
            residual = float(np.max(np.abs(X @ Y - Y @ X - rhs)))
            instances += 1
            worst = max(worst, residual)
            if residual != 0.0:
                failures += 1
        checks.append(IdentityCheck(name, instances, failures, worst))
        if failures:
            logger.warning("Bracket identity %s failed %d/%d times (n=%d)",
                           name, failures, instances, n)
    return BracketTableReport(n, tuple(checks))


def random_element(n: int, rng: np.random.Generator, part: Optional[Literal['k', 'p']] = None,
                   integer: bool = False) -> AlgebraElement:
    """Random element of su(n,1), optionally confined to the k or p part.

    With ``integer=True`` coefficients are drawn from {-3, ..., 3} so every
    derived bracket stays exact.
    """
    dim = real_dimension(n)
    if integer:
        coeffs = rng.integers(-3, 4, size=dim).astype(float)
    else:
        coeffs = rng.standard_normal(dim)
    if part is not None:
        k_mask, p_mask = part_masks(n)
        coeffs = np.where(k_mask if part == 'k' else p_mask, coeffs, 0.0)
    return reconstruct(RealCoordinates(n, coeffs))
