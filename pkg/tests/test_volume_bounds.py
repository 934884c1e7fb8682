"""
Tests for the Wang radius, comparison volumes and the bound C(n)
"""
import json
import math
import sys
from unittest.mock import patch

import pytest

from chorbifold.config import CLOSED_MANIFOLD_MIN_N2, PI_OVER_21, PRINTED_R0
from chorbifold.exceptions import (
    InconsistencyError,
    InvalidParameterError,
    NoRootError,
    SignError,
)
from chorbifold.volume_bounds import (
    BOUND_COLUMNS,
    LOG10_E,
    bound_table,
    cgb_volume,
    curvature_bound,
    euler_symmetry_bound,
    gunther_ball_volume,
    log_bound,
    log_gunther_ball_volume,
    log_quotient_volume_bound,
    log_sin_power_integral,
    log_unitary_volume,
    orbifold_bound,
    quadrature_check,
    quotient_volume_bound,
    reference_comparison,
    sin_power_integral,
    symmetry_order_bound,
    unitary_volume,
    wang_F,
    wang_radius,
)


class TestWangRadius:
    """Least positive zero of Wang's function"""

    def test_limit_at_zero(self):
        """F(t) -> -1 as t -> 0+"""
        assert wang_F(1e-9) == pytest.approx(-1.0, abs=1e-8)

    def test_series_branch(self):
        """Below the cutoff the series matches the direct formula"""
        t = 0.99e-4
        direct = math.expm1(t) + 2 * math.sin(t) - t / math.expm1(t)
        assert wang_F(t) == pytest.approx(direct, abs=1e-14)

    def test_root_value(self):
        """R_G is about 0.277 and F vanishes there"""
        root = wang_radius()
        assert 0.2770 <= root <= 0.2780
        assert abs(wang_F(root)) < 1e-10

    def test_half_root_matches_printed_radius(self):
        """R_G / 2 agrees with 0.1385"""
        assert abs(wang_radius() / 2 - PRINTED_R0) < 5e-4

    def test_sign_change(self):
        """F is negative before the root and positive after it"""
        root = wang_radius()
        assert wang_F(root - 1e-3) < 0 < wang_F(root + 1e-3)

    def test_larger_constants_shrink_radius(self):
        """Doubling C1 and C2 halves the radius"""
        assert wang_radius(2.0, 2.0) == pytest.approx(wang_radius() / 2, abs=1e-9)

    def test_no_root(self):
        """Tiny constants push the zero out of the scan window"""
        with pytest.raises(NoRootError):
            wang_radius(1e-6, 1e-6)

    @pytest.mark.parametrize('kwargs', [{'C1': 0.0}, {'C2': -1.0}, {'tol': 0.0}, {'C1': float('inf')}])
    def test_invalid_inputs(self, kwargs):
        """Non-positive or non-finite inputs are rejected"""
        with pytest.raises(InvalidParameterError):
            wang_radius(**kwargs)


class TestSinPowerIntegral:
    """Integral of sin^m over [0, L]"""

    def test_known_values(self):
        """I_0 = L, I_1(pi) = 2, I_2(pi) = pi/2"""
        assert sin_power_integral(0, 1.3) == 1.3
        assert sin_power_integral(1, math.pi) == pytest.approx(2.0)
        assert sin_power_integral(2, math.pi) == pytest.approx(math.pi / 2)

    @pytest.mark.parametrize('L', [0.5228, 1.0, 2.0])
    def test_low_order_antiderivatives(self, L):
        """I_1 = 1 - cos L and I_2 = L/2 - sin(2L)/4"""
        assert sin_power_integral(1, L) == pytest.approx(1 - math.cos(L), rel=1e-12)
        assert sin_power_integral(2, L) == pytest.approx(L / 2 - math.sin(2 * L) / 4, rel=1e-12)

    def test_m2_short_interval_value(self):
        """m = 2 over [0, 0.5228] is 0.0450936"""
        assert sin_power_integral(2, 0.5228) == pytest.approx(0.0450936, abs=5e-8)
        assert math.exp(log_sin_power_integral(2, 0.5228)) == pytest.approx(0.0450936, abs=5e-8)

    def test_zero_limit(self):
        """The integral over [0, 0] is 0"""
        assert sin_power_integral(7, 0.0) == 0.0

    @pytest.mark.parametrize('m', [1, 2, 7, 24, 80, 200])
    @pytest.mark.parametrize('L', [1.5, 2.5, math.pi])
    def test_quadrature_agrees(self, m, L):
        """Recurrence and composite Gauss-Legendre agree"""
        check = quadrature_check(m, L)
        assert check['relative_difference'] < 1e-10
        assert check['refinement_difference'] < 1e-12

    def test_log_space_huge_exponent(self):
        """The log-space path stays finite where the integral underflows"""
        value = log_sin_power_integral(100_000, 0.5)
        assert math.isfinite(value)
        assert value < -40_000

    @pytest.mark.parametrize('m,L', [(-1, 1.0), (2, -0.1), (2, 4.0), (1.5, 1.0)])
    def test_invalid(self, m, L):
        """m must be a non-negative integer, L in [0, pi]"""
        with pytest.raises(InvalidParameterError):
            sin_power_integral(m, L)

    def test_log_of_zero(self):
        """log of the empty integral is undefined"""
        with pytest.raises(InvalidParameterError):
            log_sin_power_integral(3, 0.0)


class TestComparisonVolumes:
    """Gunther ball volumes and Vol U(n)"""

    def test_full_spheres(self):
        """A radius-pi ball in the unit sphere is the whole sphere"""
        assert gunther_ball_volume(2, 1.0, math.pi) == pytest.approx(4 * math.pi)
        assert gunther_ball_volume(3, 1.0, math.pi) == pytest.approx(2 * math.pi ** 2)

    def test_radius_capped(self):
        """Radii past pi / sqrt(k) give the whole sphere"""
        assert gunther_ball_volume(2, 4.0, 10.0) == pytest.approx(gunther_ball_volume(2, 4.0, math.pi / 2))

    def test_small_ball_is_euclidean(self):
        """Small balls have nearly Euclidean volume"""
        r = 1e-3
        assert gunther_ball_volume(3, 1.0, r) == pytest.approx(4 / 3 * math.pi * r ** 3, rel=1e-5)

    def test_log_matches(self):
        """Log path agrees with the direct value"""
        for d, k, r in [(3, 14.25, 0.1385), (8, 23.25, 0.1385), (24, 41.25, 0.2)]:
            assert log_gunther_ball_volume(d, k, r) == pytest.approx(
                math.log(gunther_ball_volume(d, k, r)), abs=1e-10)

    @pytest.mark.parametrize('d,k,r', [(1, 1.0, 1.0), (3, 0.0, 1.0), (3, 1.0, -1.0)])
    def test_invalid(self, d, k, r):
        """d >= 2, k > 0, r > 0"""
        with pytest.raises(InvalidParameterError):
            gunther_ball_volume(d, k, r)

    def test_unitary_volume(self):
        """Vol U(1) = 2 pi, Vol U(2) = 4 pi^3"""
        assert unitary_volume(1) == pytest.approx(2 * math.pi)
        assert unitary_volume(2) == pytest.approx(4 * math.pi ** 3)

    def test_unitary_log_matches(self):
        """log Vol U(n) agrees with the direct product"""
        for n in range(1, 15):
            assert log_unitary_volume(n) == pytest.approx(math.log(unitary_volume(n)), rel=1e-12)

    def test_unitary_invalid(self):
        """n must be positive"""
        with pytest.raises(InvalidParameterError):
            unitary_volume(0)


class TestOrbifoldBound:
    """C(n)"""

    def test_curvature_bound(self):
        """k0 = (36n+21)/4"""
        assert curvature_bound(1) == 14.25

    def test_dimension_one(self):
        """C(1) is about 0.002 and below the sharp bound pi/21"""
        report = orbifold_bound(1)
        assert 0.0015 < report.C < 0.0025
        assert report.C < PI_OVER_21

    def test_dimension_two(self):
        """C(2) is about 2.918e-9"""
        assert orbifold_bound(2).C == pytest.approx(2.918e-9, rel=0.01)

    def test_report_fields(self):
        """Report carries every ingredient"""
        report = orbifold_bound(2)
        assert report.d0 == 8
        assert report.k0 == 23.25
        assert report.C1 == report.C2 == 1.0
        assert report.r0 == PRINTED_R0
        assert report.radius_source == 'printed'
        assert report.log_C == pytest.approx(report.log_V_ball - report.log_vol_Un)

    @pytest.mark.parametrize('n', range(1, 21))
    def test_closed_form_agrees(self, n):
        """Closed form and assembly agree in log space"""
        assert orbifold_bound(n).crosscheck_residual < 1e-9

    def test_large_n_finite(self):
        """log10 C(n) stays finite up to n = 100; C itself underflows"""
        for n in (50, 75, 100):
            report = orbifold_bound(n)
            assert math.isfinite(report.log10_C)
        assert orbifold_bound(100).C == 'underflow'

    def test_integration_cap(self):
        """L = pi first activates at n = 57"""
        assert orbifold_bound(56).L < math.pi
        assert orbifold_bound(57).L == math.pi

    def test_computed_radius(self):
        """The root finder's radius gives a nearby bound"""
        printed = orbifold_bound(2)
        computed = orbifold_bound(2, use_computed_radius=True)
        assert computed.radius_source == 'computed'
        assert abs(computed.half_radius_deviation) < 2.5e-4
        assert computed.C == pytest.approx(printed.C, rel=0.05)

    def test_invalid_dimension(self):
        """n = 0 is rejected"""
        with pytest.raises(InvalidParameterError):
            orbifold_bound(0)

    @patch('chorbifold.volume_bounds._log_closed_form')
    def test_inconsistency(self, mock_closed):
        """Disagreeing paths raise with both logs attached"""
        mock_closed.return_value = 0.0
        with pytest.raises(InconsistencyError) as info:
            orbifold_bound(2)
        assert info.value.log_closed == 0.0
        assert info.value.log_assembled == pytest.approx(math.log(2.918e-9), abs=0.01)

    def test_to_row(self):
        """Rows follow BOUND_COLUMNS with C rendered as a string"""
        row = orbifold_bound(2).to_row(4)
        assert list(row) == BOUND_COLUMNS
        assert isinstance(row['C'], str)
        assert float(row['C']) == pytest.approx(2.918e-9, rel=0.01)

    def test_to_dict_json(self):
        """to_dict is JSON serialisable"""
        payload = json.loads(json.dumps(orbifold_bound(1).to_dict()))
        assert payload['n'] == 1
        assert payload['radius_source'] == 'printed'

    def test_quotient_volume_bound(self):
        """V(d0, k0, r0) = C(n) Vol U(n)"""
        for n in (1, 2, 3):
            assert log_quotient_volume_bound(n) - log_unitary_volume(n) == pytest.approx(log_bound(n))
        assert quotient_volume_bound(1) == pytest.approx(orbifold_bound(1).C * unitary_volume(1))


class TestBoundTable:
    """Batch computation"""

    def test_order(self):
        """Reports come back in the order requested"""
        reports = bound_table([3, 1, 2])
        assert [r.n for r in reports] == [3, 1, 2]

    def test_invalid_dimension(self):
        """Every dimension is validated"""
        with pytest.raises(InvalidParameterError):
            bound_table([1, 0])

    def test_progress_without_tqdm(self):
        """A missing tqdm gives an install hint"""
        with patch.dict(sys.modules, {'tqdm': None}):
            with pytest.raises(ImportError, match='pip install chorbifold\\[cli\\]'):
                bound_table([1], show_progress=True)


class TestReferenceComparison:
    """Ratios against known volumes"""

    def test_dimension_one(self):
        """pi/21 exceeds C(1)"""
        ratios = reference_comparison(1)
        assert list(ratios) == ['pi/21']
        assert ratios['pi/21'] > 1

    def test_dimension_two(self):
        """Both n = 2 manifold volumes exceed C(2)"""
        ratios = reference_comparison(2)
        assert len(ratios) == 2
        assert all(value > 1e9 for value in ratios.values())

    def test_other_dimensions(self):
        """No reference volumes beyond n = 2"""
        assert reference_comparison(3) == {}


class TestSymmetryBounds:
    """Isometry group order bounds"""

    def test_volume_equal_to_bound(self):
        """volume = C(n) gives order bound 1"""
        assert symmetry_order_bound(math.exp(log_bound(2)), 2) == 1

    def test_monotone(self):
        """Larger volumes never lower the bound"""
        assert symmetry_order_bound(1.0, 1) <= symmetry_order_bound(2.0, 1)

    def test_invalid_volume(self):
        """Volumes must be positive"""
        with pytest.raises(InvalidParameterError):
            symmetry_order_bound(0.0, 1)

    def test_beyond_double_range(self):
        """Ratios past exp(700) are built from the log"""
        bound = symmetry_order_bound(1e300, 80)
        log10_ratio = (math.log(1e300) - log_bound(80)) * LOG10_E
        digits = str(bound)
        assert len(digits) == math.floor(log10_ratio) + 1
        leading = 10 ** (log10_ratio - math.floor(log10_ratio))
        assert int(digits[:8]) / 1e7 == pytest.approx(leading, rel=1e-6)

    def test_euler_bound_large_n(self):
        """chi = 3 at n = 20 gives an integer with hundreds of digits"""
        bound = euler_symmetry_bound(20, 3)
        assert isinstance(bound, int)
        log10_ratio = (math.log(cgb_volume(20, 3)) - log_bound(20)) * LOG10_E
        assert log10_ratio > 700
        assert len(str(bound)) == math.floor(log10_ratio) + 1

    def test_float_and_decimal_paths_agree(self):
        """Just below the switch both paths give the same leading digits"""
        log_volume = 699.0 + log_bound(3)
        below = symmetry_order_bound(math.exp(log_volume), 3)
        above = symmetry_order_bound(math.exp(log_volume + 2.0), 3)
        assert above / below == pytest.approx(math.exp(2.0), rel=1e-9)

    def test_cgb_volume(self):
        """(-4 pi)^n chi / (n+1)!"""
        assert cgb_volume(1, -2) == pytest.approx(4 * math.pi)
        assert cgb_volume(2, 3) == pytest.approx(CLOSED_MANIFOLD_MIN_N2)

    @pytest.mark.parametrize('n,chi', [(1, 2), (2, -1), (3, 0)])
    def test_cgb_sign(self, n, chi):
        """chi must have the sign of (-1)^n"""
        with pytest.raises(SignError):
            cgb_volume(n, chi)

    def test_cgb_non_integer(self):
        """chi must be an integer"""
        with pytest.raises(InvalidParameterError):
            cgb_volume(1, -2.0)

    def test_euler_bound(self):
        """Euler bound is the symmetry bound of the CGB volume"""
        assert euler_symmetry_bound(2, 3) == symmetry_order_bound(CLOSED_MANIFOLD_MIN_N2, 2)
        assert euler_symmetry_bound(1, -2) == math.floor(4 * math.pi / orbifold_bound(1).C)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
