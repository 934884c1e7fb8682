"""Custom exceptions for chorbifold."""

from typing import Optional


class ChorbifoldException(Exception):
    """Base exception for all chorbifold errors."""
    pass


class InvalidParameterError(ChorbifoldException):
    """Raised when invalid parameters are provided.

    Check that:
    - n (complex dimension) is a positive integer
    - sample and trial counts are at least 1
    - tolerances, radii and curvatures are positive
    - integration limits lie in [0, pi]
    """
    pass


class ShapeError(ChorbifoldException):
    """Raised when two operands do not share the same dimension parameter n.

    Common causes:
    - Bracketing elements of su(n,1) and su(m,1) with n != m
    - Passing a lift of length n+2 to an n-dimensional operation
    """
    pass


class MembershipError(ChorbifoldException):
    """Raised when a value is not in the set an operation requires.

    For matrices this is su(n,1) membership (J M* J = -M, tr M = 0); for
    homogeneous points it is membership in V- (<z,z> < 0). The violated
    condition is kept on ``condition``.
    """

    def __init__(self, message: str, condition: Optional[str] = None):
        super().__init__(message)
        self.condition = condition


class PreconditionError(ChorbifoldException):
    """Raised when an input lies in the wrong part of the Cartan decomposition.

    Common causes:
    - A closed-form curvature case fed a p-vector where a k-vector is expected
    - The complex structure applied to an element with a nonzero k-part
    - A non-unit vector passed where a unit vector is required
    """
    pass


class DegeneratePlaneError(ChorbifoldException):
    """Raised when two vectors do not span a 2-plane (sectional curvature undefined)."""
    pass


class NumericalConsistencyError(ChorbifoldException):
    """Raised when a quantity that is bounded in exact arithmetic leaves its range.

    Example: the Bergman cross-ratio q = <z,w><w,z>/(<z,z><w,w>) must be
    at least 1; values below 1 - 1e-9 indicate corrupted inputs.
    """
    pass


class InvalidIsometryError(ChorbifoldException):
    """Raised when a matrix does not preserve the Hermitian form (A J A* != J)."""
    pass


class NoRootError(ChorbifoldException):
    """Raised when the bracketing scan finds no sign change.

    Wang's function F is scanned on (0, 10]; constants C1, C2 far from the
    su(n,1) values can push the first zero out of that window.
    """
    pass


class InconsistencyError(ChorbifoldException):
    """Raised when two independent computations of the same constant disagree.

    Carries both natural logarithms so the size of the disagreement is visible.
    """

    def __init__(self, message: str, log_closed: float, log_assembled: float):
        super().__init__(message)
        self.log_closed = log_closed
        self.log_assembled = log_assembled


class SignError(ChorbifoldException):
    """Raised when the Chern-Gauss-Bonnet volume would be non-positive.

    The volume (-4 pi)^n chi / (n+1)! is positive only when chi has the sign
    of (-1)^n: negative for odd n, positive for even n.
    """
    pass
