"""
Projective model of complex hyperbolic space and the SU(n,1) action on it.

C^{n,1} carries the Hermitian form <z, w> = sum_{j<=n} z_j conj(w_j) - z_{n+1} conj(w_{n+1}).
Points of H^n_C are lines of negative vectors; a point is stored as any
lift (unnormalised), and every operation re-reads the form, so results
do not depend on the lift chosen.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Sequence, Union

import numpy as np

from .config import (
    EXPM_SCALE_THRESHOLD,
    EXPM_TAYLOR_ORDER,
    TOL_BERGMAN_CLAMP,
    TOL_BERGMAN_FAIL,
    TOL_ISOMETRY,
)
from .exceptions import (
    InvalidIsometryError,
    InvalidParameterError,
    MembershipError,
    NumericalConsistencyError,
    ShapeError,
)
from .su_algebra import random_element, validate_dimension
from .utils import make_rng

logger = logging.getLogger(__name__)

ComplexVector = Union[np.ndarray, Sequence[complex]]


def signature_matrix(n: int) -> np.ndarray:
    """J = diag(1, ..., 1, -1) of size n+1."""
    diagonal = np.ones(validate_dimension(n) + 1)
    diagonal[-1] = -1.0
    return np.diag(diagonal)


def hermitian_form(z: ComplexVector, w: ComplexVector) -> complex:
    """
    <z, w> = sum_{j<=n} z_j conj(w_j) - z_{n+1} conj(w_{n+1}).

    Raises:
        ShapeError: If the vectors differ in length or are shorter than 2

    Example:
        >>> hermitian_form([0, 1], [0, 1])
        (-1+0j)
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    if z.ndim != 1 or z.shape != w.shape or z.size < 2:
        raise ShapeError(f"Vectors must be 1-D of equal length >= 2, got {z.shape} and {w.shape}")
    products = z * np.conj(w)
    return complex(np.sum(products[:-1]) - products[-1])


@dataclass(frozen=True, eq=False)
class HomogeneousPoint:
    """A lift z in C^{n+1} of a point of complex projective space."""
    n: int
    coords: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        validate_dimension(self.n)
        coords = np.array(self.coords, dtype=complex)
        if coords.shape != (self.n + 1,):
            raise ShapeError(f"Point of C^({self.n},1) needs {self.n + 1} coordinates, got {coords.shape}")
        if not np.all(np.isfinite(coords)):
            raise InvalidParameterError("Point coordinates must be finite")
        coords.setflags(write=False)
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def center(cls, n: int) -> 'HomogeneousPoint':
        """The point (0, ..., 0, 1), fixed by S(U(n) x U(1))."""
        coords = np.zeros(validate_dimension(n) + 1, dtype=complex)
        coords[-1] = 1.0
        return cls(n, coords)

    @classmethod
    def from_ball(cls, x: ComplexVector) -> 'HomogeneousPoint':
        """Lift (x, 1) of a point x of the unit ball in C^n."""
        x = np.atleast_1d(np.asarray(x, dtype=complex))
        return cls(x.size, np.append(x, 1.0))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[float]]) -> 'HomogeneousPoint':
        """From a JSON-style list of [re, im] pairs."""
        coords = np.array([complex(re, im) for re, im in pairs])
        return cls(coords.size - 1, coords)

    def to_pairs(self) -> List[List[float]]:
        return [[float(c.real), float(c.imag)] for c in self.coords]

    @property
    def form_value(self) -> float:
        """<z, z> (always real)."""
        return hermitian_form(self.coords, self.coords).real

    @property
    def is_negative(self) -> bool:
        return self.form_value < 0


def parse_point(text: str, n: int) -> HomogeneousPoint:
    """
    Parse comma-separated complex literals such as ``"0.5+0.1i, 0, 1"``.

    Both ``i`` and ``j`` are accepted as the imaginary unit.

    Raises:
        InvalidParameterError: If a literal does not parse or the count is not n+1
    """
    tokens = [token.strip() for token in text.split(',') if token.strip()]
    try:
        coords = [complex(token.replace(' ', '').replace('i', 'j')) for token in tokens]
    except ValueError:
        raise InvalidParameterError(
            f"Could not parse point '{text}'.\n"
            "Use comma-separated complex literals, e.g. '0.5+0.1i,0,1'."
        ) from None
    if len(coords) != n + 1:
        raise InvalidParameterError(
            f"Point '{text}' has {len(coords)} coordinates; n={n} needs {n + 1}"
        )
    return HomogeneousPoint(n, np.array(coords))


def _require_negative(z: HomogeneousPoint, name: str) -> float:
    value = z.form_value
    if not value < 0:
        raise MembershipError(
            f"{name} is not in complex hyperbolic space: <z,z> = {value:.6g} must be negative",
            condition='<z,z> < 0',
        )
    return value


def bergman_distance(z: HomogeneousPoint, w: HomogeneousPoint) -> float:
    """
    Bergman distance rho(z, w) = 2 arccosh(sqrt(q)), q = <z,w><w,z> / (<z,z><w,w>).

    arccosh is evaluated as log1p((q-1)/(sqrt(q)+1) + sqrt(q-1)) so tiny
    distances keep their relative accuracy. q is built symmetrically in
    (z, w), so rho(z, w) == rho(w, z) bit for bit. |q - 1| <= 1e-12 is read as
    q = 1 (distance 0); q further below 1, up to 1e-9, is clamped with a
    warning.

    Raises:
        ShapeError: If the points live in different dimensions
        MembershipError: If either point is not a negative line
        NumericalConsistencyError: If q < 1 - 1e-9

    Example:
        >>> z = HomogeneousPoint.center(1)
        >>> w = HomogeneousPoint.from_ball([0.5])
        >>> round(bergman_distance(z, w), 6)
        1.098612
    """
    if z.n != w.n:
        raise ShapeError(f"Points live in different dimensions: n={z.n} vs n={w.n}")
    zz = _require_negative(z, 'z')
    ww = _require_negative(w, 'w')
    # |<z,w>| * |<w,z>| keeps q independent of the argument order
    zw = abs(hermitian_form(z.coords, w.coords))
    wz = abs(hermitian_form(w.coords, z.coords))
    q = zw * wz / (zz * ww)
    excess = q - 1.0
    if excess < -TOL_BERGMAN_FAIL:
        raise NumericalConsistencyError(
            f"Bergman cross-ratio q = {q!r} is below 1 beyond rounding slack; "
            "the inputs are inconsistent"
        )
    if excess < -TOL_BERGMAN_CLAMP:
        logger.warning("Clamping Bergman cross-ratio q = %.15g to 1", q)
        return 0.0
    if excess <= TOL_BERGMAN_CLAMP:
        return 0.0
    root_q = math.sqrt(q)
    return 2.0 * math.log1p(excess / (root_q + 1.0) + math.sqrt(excess))


# ============================================================================
# MATRIX EXPONENTIAL AND THE GROUP ACTION
# ============================================================================

def matrix_exp(M: np.ndarray) -> np.ndarray:
    """
    Matrix exponential by scaling and squaring with a Taylor kernel.

    M is scaled by 2^-s until its 1-norm is at most EXPM_SCALE_THRESHOLD,
    the degree-EXPM_TAYLOR_ORDER Taylor polynomial is evaluated by Horner's
    rule, and the result is squared s times.

    Raises:
        ShapeError: If M is not square
        InvalidParameterError: If M has non-finite entries
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"matrix_exp needs a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidParameterError("matrix_exp needs finite entries")
    size = M.shape[0]
    one_norm = float(np.linalg.norm(M, 1)) if size else 0.0
    squarings = max(0, math.ceil(math.log2(one_norm / EXPM_SCALE_THRESHOLD))) if one_norm > 0 else 0
    A = M / (2.0 ** squarings)
    identity = np.eye(size, dtype=complex)
    result = identity.copy()
    for order in range(EXPM_TAYLOR_ORDER, 0, -1):
        result = identity + (A @ result) / order
    for _ in range(squarings):
        result = result @ result
    return result


def isometry_residual(A: np.ndarray) -> float:
    """max |A* J A - J|, zero exactly for elements of U(n,1)."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 2:
        raise ShapeError(f"Expected a square matrix of size >= 2, got shape {A.shape}")
    J = signature_matrix(A.shape[0] - 1)
    return float(np.max(np.abs(A.conj().T @ J @ A - J)))


def random_isometry(n: int, seed: int, magnitude: float = 1.0) -> np.ndarray:
    """
    Seeded random element exp(X) of SU(n,1), X in su(n,1) with Frobenius norm ``magnitude``.

    Raises:
        InvalidParameterError: If magnitude is not positive or the seed is invalid
    """
    n = validate_dimension(n)
    if not (isinstance(magnitude, (int, float)) and magnitude > 0 and math.isfinite(magnitude)):
        raise InvalidParameterError(f"magnitude must be a positive finite number, got {magnitude!r}")
    rng = make_rng(seed)
    X = random_element(n, rng)
    X = X * (magnitude / float(np.linalg.norm(X.entries)))
    A = matrix_exp(X.entries)
    residual = isometry_residual(A)
    if residual > TOL_ISOMETRY:
        logger.warning("random_isometry residual %.3e for n=%d, magnitude %g", residual, n, magnitude)
    return A


def apply_isometry(A: np.ndarray, z: HomogeneousPoint) -> HomogeneousPoint:
    """
    Act on a point by a matrix of U(n,1).

    Raises:
        ShapeError: If A does not have size n+1
        InvalidIsometryError: If A does not preserve the form
        MembershipError: If z is not a negative line
    """
    A = np.asarray(A, dtype=complex)
    if A.shape != (z.n + 1, z.n + 1):
        raise ShapeError(f"Matrix of shape {A.shape} cannot act on C^({z.n},1)")
    residual = isometry_residual(A)
    if residual > TOL_ISOMETRY:
        raise InvalidIsometryError(
            f"Matrix does not preserve the Hermitian form: max |A* J A - J| = {residual:.3e}"
        )
    _require_negative(z, 'z')
    return HomogeneousPoint(z.n, A @ z.coords)
