"""
Tests for validation and config
"""
import math

import pytest

from chorbifold.config import (
    CLOSED_MANIFOLD_MIN_N2,
    CUSPED_MANIFOLD_MIN_N2,
    DEFAULT_DIGITS,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    MAX_DIGITS,
    OUTPUT_FORMATS,
    PI_OVER_21,
    PRINTED_HALF_R0,
    PRINTED_R0,
    SUBCOMMANDS,
    TOL_EXACT,
    TOL_SAMPLING,
    TOL_TENSOR,
    VERIFY_MODULES,
)
from chorbifold.exceptions import (
    ChorbifoldException,
    DegeneratePlaneError,
    InconsistencyError,
    InvalidIsometryError,
    InvalidParameterError,
    MembershipError,
    NoRootError,
    NumericalConsistencyError,
    PreconditionError,
    ShapeError,
    SignError,
)
from chorbifold.su_algebra import real_dimension, validate_dimension


class TestConfigData:
    """Test that config data is properly structured"""

    def test_defaults(self):
        """Documented CLI defaults"""
        assert DEFAULT_SEED == 42
        assert DEFAULT_TRIALS == 1000
        assert DEFAULT_TOL == 1e-10
        assert DEFAULT_DIGITS == 6
        assert MAX_DIGITS == 15

    def test_subcommands(self):
        """Every computational subcommand is listed"""
        assert SUBCOMMANDS == [
            'bound', 'table', 'wang-radius', 'ball-volume', 'unitary-volume',
            'symmetry-bound', 'euler-bound', 'distance', 'verify',
        ]

    def test_output_formats(self):
        """CLI output formats"""
        assert OUTPUT_FORMATS == ['json', 'csv', 'markdown', 'plain']

    def test_verify_modules_order(self):
        """Suites run bottom-up"""
        assert list(VERIFY_MODULES) == ['su_algebra', 'metric_geometry', 'curvature', 'chs_model', 'volume_bounds']

    def test_tolerance_hierarchy(self):
        """Exact checks are tighter than tensor checks, which are tighter than sampling"""
        assert TOL_EXACT < TOL_TENSOR < TOL_SAMPLING

    def test_printed_radius_constants(self):
        """The printed half radius is half the printed radius"""
        assert PRINTED_R0 / 2 == PRINTED_HALF_R0

    def test_reference_volumes(self):
        """Reference volumes used in comparisons"""
        assert PI_OVER_21 == pytest.approx(math.pi / 21)
        assert CLOSED_MANIFOLD_MIN_N2 == pytest.approx(8 * math.pi ** 2)
        assert CUSPED_MANIFOLD_MIN_N2 == pytest.approx(CLOSED_MANIFOLD_MIN_N2 / 3)


class TestDimensionValidation:
    """Complex dimension checks"""

    @pytest.mark.parametrize('n', [1, 2, 7, 100])
    def test_valid(self, n):
        """Positive integers pass through"""
        assert validate_dimension(n) == n

    def test_invalid(self, invalid_dimensions):
        """Zero, negatives, floats, strings, booleans and None are rejected"""
        for n in invalid_dimensions:
            with pytest.raises(InvalidParameterError):
                validate_dimension(n)

    def test_error_message_names_value(self):
        """The message names the rejected value and the admissible range"""
        with pytest.raises(InvalidParameterError, match=r"(?s)n=0.*n >= 1"):
            validate_dimension(0)

    @pytest.mark.parametrize('n,expected', [(1, 3), (2, 8), (3, 15), (10, 120)])
    def test_real_dimension(self, n, expected):
        """dim su(n,1) = n^2 + 2n"""
        assert real_dimension(n) == expected


class TestExceptions:
    """Test custom exception classes"""

    @pytest.mark.parametrize('cls', [
        InvalidParameterError, ShapeError, PreconditionError, DegeneratePlaneError,
        NumericalConsistencyError, InvalidIsometryError, NoRootError, SignError,
    ])
    def test_hierarchy(self, cls):
        """Every library error derives from ChorbifoldException"""
        assert issubclass(cls, ChorbifoldException)
        with pytest.raises(ChorbifoldException):
            raise cls("boom")

    def test_invalid_parameter_error_message(self):
        """InvalidParameterError preserves message"""
        error_msg = "Custom error message"
        try:
            raise InvalidParameterError(error_msg)
        except InvalidParameterError as e:
            assert str(e) == error_msg

    def test_membership_error_condition(self):
        """MembershipError carries the violated condition"""
        error = MembershipError("not in su(2,1)", condition='tr M = 0')
        assert error.condition == 'tr M = 0'
        assert MembershipError("plain").condition is None

    def test_inconsistency_error_carries_logs(self):
        """InconsistencyError keeps both logarithms"""
        error = InconsistencyError("disagree", log_closed=-1.0, log_assembled=-1.5)
        assert error.log_closed == -1.0
        assert error.log_assembled == -1.5
        assert isinstance(error, ChorbifoldException)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
