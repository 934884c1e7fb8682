"""
Tests for the Levi-Civita connection, curvature and the quotient
"""
import numpy as np
import pytest

from chorbifold.curvature import (
    CASE_PARTS,
    basis_plane_curvatures,
    basis_plane_max,
    closed_form_curvature,
    complex_structure,
    curvature_operator,
    curvature_tensor,
    holomorphic_base_curvature,
    holomorphic_bracket_closed_form,
    levi_civita,
    mixed_plane_terms,
    quotient_sectional_curvature,
    random_planes,
    random_unit_horizontal,
    sample_sectional_curvatures,
    sectional_bound_sample,
    sectional_curvature,
    sectional_curvatures_batch,
    upper_curvature_bound,
)
from chorbifold.exceptions import (
    DegeneratePlaneError,
    InvalidParameterError,
    PreconditionError,
    ShapeError,
)
from chorbifold.metric_geometry import MetricSpec, frame_structure_constants, inner_product, norm
from chorbifold.su_algebra import basis_element, bracket, random_element


def _close(A, B, tol=1e-10):
    scale = max(1.0, float(np.max(np.abs(B.entries))))
    return float(np.max(np.abs(A.entries - B.entries))) <= tol * scale


class TestConnection:
    """Koszul connection in the orthonormal frame"""

    @pytest.mark.parametrize('variant', ['canonical', 'scaled'])
    def test_torsion_free(self, small_n, variant):
        """nabla_X Y - nabla_Y X = [X, Y]"""
        conn = levi_civita(small_n, MetricSpec(variant, small_n))
        assert conn.torsion_residual() < 1e-10

    @pytest.mark.parametrize('variant', ['canonical', 'scaled'])
    def test_metric_compatible(self, small_n, variant):
        """nabla is skew in the orthonormal frame"""
        conn = levi_civita(small_n, MetricSpec(variant, small_n))
        assert conn.compatibility_residual() < 1e-10

    @pytest.mark.parametrize('n', [1, 2])
    def test_koszul_formula(self, n, rng):
        """2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y> for frame vectors"""
        m = MetricSpec.scaled(n)
        conn = levi_civita(n, m)
        cf = frame_structure_constants(n, m)
        for _ in range(20):
            x, y, z = rng.standard_normal((3, cf.shape[0]))

            def pair(a, b, c):
                return float(np.einsum('a,b,abc,c->', a, b, cf, c))

            expected = 0.5 * (pair(x, y, z) - pair(y, z, x) + pair(z, x, y))
            assert float(conn.covariant(x, y) @ z) == pytest.approx(expected, abs=1e-10)

    def test_cached(self, fresh_cache):
        """The same metric returns the same connection object"""
        m = MetricSpec.scaled(2)
        assert levi_civita(2, m) is levi_civita(2, m)


class TestCurvatureTensor:
    """Algebraic symmetries of R"""

    @pytest.mark.parametrize('n', [1, 2])
    def test_symmetries(self, n):
        """Antisymmetry, pair symmetry and the first Bianchi identity"""
        tensor = curvature_tensor(n, MetricSpec.scaled(n))
        assert tensor.antisymmetry_residual() < 1e-10
        assert tensor.pair_symmetry_residual() < 1e-10
        assert tensor.bianchi_residual() < 1e-10

    def test_tensor_agrees_with_sampling_path(self, rng):
        """Tensor contraction and batched connection give the same sectional curvature"""
        m = MetricSpec.scaled(2)
        tensor = curvature_tensor(2, m)
        planes = random_planes(2, 5, rng)
        batched = sectional_curvatures_batch(2, planes, m)
        for plane, expected in zip(planes, batched):
            assert tensor.sectional(plane[0], plane[1]) == pytest.approx(expected, abs=1e-10)


class TestClosedForms:
    """Bracket closed forms against the Koszul tensor"""

    @pytest.mark.parametrize('case', ['UVW', 'XYZ', 'UXY', 'XYV'])
    @pytest.mark.parametrize('variant', ['canonical', 'scaled'])
    def test_closed_form_matches(self, case, variant, rng):
        """R(A,B)C from the connection equals the bracket expression"""
        for n in (1, 2, 3):
            m = MetricSpec(variant, n)
            for _ in range(10):
                A, B, C = (random_element(n, rng, part=part) for part in CASE_PARTS[case])
                assert _close(curvature_operator(A, B, C, m), closed_form_curvature(case, A, B, C))

    def test_wrong_part(self, rng):
        """A p vector where a k vector is expected is rejected"""
        U = random_element(2, rng, part='k')
        X = random_element(2, rng, part='p')
        with pytest.raises(PreconditionError):
            closed_form_curvature('UVW', U, X, U)

    def test_unknown_case(self, rng):
        """Only the four cases exist"""
        X = random_element(2, rng, part='p')
        with pytest.raises(InvalidParameterError):
            closed_form_curvature('XXX', X, X, X)


class TestSectionalCurvature:
    """Sectional curvatures and the upper bound"""

    def test_upper_bound_value(self):
        """(36n+21)/4"""
        assert upper_curvature_bound(1) == 14.25
        assert upper_curvature_bound(2) == 23.25

    def test_h_ialpha_plane(self):
        """The (h_1, i alpha_13) plane has curvature 1/4"""
        m = MetricSpec.scaled(2)
        K = sectional_curvature(basis_element(2, 'h', 1), basis_element(2, 'ialpha_p', 1), m)
        assert K == pytest.approx(0.25, abs=1e-12)

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_basis_plane_max(self, n):
        """Maximum over standard basis planes is exactly 1/4"""
        assert abs(basis_plane_max(n) - 0.25) < 1e-12

    def test_basis_plane_keys(self):
        """Keys are label pairs, one per pair of basis elements"""
        curvatures = basis_plane_curvatures(1)
        assert len(curvatures) == 3
        assert ('h_1', 'beta_1_2') in curvatures

    def test_scale_covariance(self, rng):
        """Scaling the metric by c scales sectional curvature by 1/c"""
        X = random_element(2, rng)
        Y = random_element(2, rng)
        m = MetricSpec.scaled(2)
        K = sectional_curvature(X, Y, m)
        assert sectional_curvature(X, Y, m.rescaled(3.0)) == pytest.approx(K / 3.0, rel=1e-9)

    def test_symmetric_in_arguments(self, rng):
        """K(X, Y) = K(Y, X)"""
        X = random_element(2, rng)
        Y = random_element(2, rng)
        m = MetricSpec.canonical(2)
        assert sectional_curvature(X, Y, m) == pytest.approx(sectional_curvature(Y, X, m), rel=1e-10)

    def test_degenerate_plane(self, rng):
        """Dependent vectors do not span a plane"""
        X = random_element(2, rng)
        with pytest.raises(DegeneratePlaneError):
            sectional_curvature(X, 2.0 * X, MetricSpec.scaled(2))

    def test_batch_shape_checked(self):
        """planes must be (S, 2, d0)"""
        with pytest.raises(ShapeError):
            sectional_curvatures_batch(2, np.zeros((3, 8)), MetricSpec.scaled(2))

    def test_invalid_trials(self):
        """trials must be positive"""
        with pytest.raises(InvalidParameterError):
            sample_sectional_curvatures(1, 0, seed=1)

    def test_sampling_reproducible(self):
        """Same seed, same curvatures"""
        first = sample_sectional_curvatures(2, 50, seed=9)
        second = sample_sectional_curvatures(2, 50, seed=9)
        assert np.array_equal(first, second)

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_sampled_bound(self, n):
        """Sampled planes never exceed (36n+21)/4"""
        sample = sectional_bound_sample(n, trials=2000, seed=11)
        assert sample.within_bound
        assert sample.bound == upper_curvature_bound(n)
        assert sample.max_found >= 0.25 - 1e-12

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_sampled_bound_full_sweep(self, n):
        """Ten thousand planes per dimension"""
        assert sectional_bound_sample(n, trials=10_000, seed=42).within_bound


class TestMixedPlaneTerms:
    """Term-by-term split of <R(A,B)B,A>"""

    def test_terms_sum_to_total(self, rng):
        """The six surviving terms add up to the full curvature form"""
        for n in (1, 2, 3):
            A = random_element(n, rng)
            B = random_element(n, rng)
            split = mixed_plane_terms(A, B)
            assert split.term_sum == pytest.approx(split.total, rel=1e-9, abs=1e-9)

    def test_bounds_sum(self):
        """Per-term bounds add up to (36n+21)/4"""
        for n in (1, 2, 5):
            split = mixed_plane_terms(basis_element(n, 'h', 1), basis_element(n, 'beta_p', 1))
            assert split.bound_sum == pytest.approx(upper_curvature_bound(n))

    def test_pp_term_non_positive(self, rng):
        """<R(X,Y)Y,X> is never positive"""
        split = mixed_plane_terms(random_element(2, rng), random_element(2, rng))
        assert split.terms['XYYX'] <= 1e-10


class TestComplexStructure:
    """J on p and the quotient curvature"""

    def test_j_squared(self, rng):
        """J^2 = -1"""
        X = random_element(3, rng, part='p')
        assert complex_structure(complex_structure(X)).allclose(-X, atol=1e-12)

    def test_j_isometry(self, rng):
        """J preserves the metric and X is orthogonal to JX"""
        m = MetricSpec.scaled(2)
        X = random_element(2, rng, part='p')
        assert norm(complex_structure(X), m) == pytest.approx(norm(X, m))
        assert inner_product(X, complex_structure(X), m) == pytest.approx(0.0, abs=1e-12)

    def test_j_rejects_k(self, rng):
        """J is only defined on p"""
        with pytest.raises(PreconditionError):
            complex_structure(random_element(2, rng, part='k'))

    def test_holomorphic_bracket(self, rng):
        """[X, JX] matches its closed form"""
        for n in (1, 2, 3):
            X = random_element(n, rng, part='p')
            assert _close(bracket(X, complex_structure(X)), holomorphic_bracket_closed_form(X), 1e-12)

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_holomorphic_curvature(self, n, rng):
        """K_b(X, JX) = -1 for unit X"""
        for _ in range(20):
            X = random_unit_horizontal(n, rng)
            assert holomorphic_base_curvature(X) == pytest.approx(-1.0, abs=1e-9)

    def test_holomorphic_needs_unit(self):
        """Non-unit vectors are rejected"""
        with pytest.raises(PreconditionError):
            holomorphic_base_curvature(basis_element(2, 'beta_p', 1))

    def test_quotient_pinching(self, rng):
        """Base curvature of horizontal planes lies in [-1, -1/4]"""
        for n in (2, 3):
            for _ in range(20):
                X = random_element(n, rng, part='p')
                Y = random_element(n, rng, part='p')
                K = quotient_sectional_curvature(X, Y)
                assert -1.0 - 1e-9 <= K <= -0.25 + 1e-9

    def test_n1_plane(self):
        """At n = 1 the only horizontal plane has base curvature -1 and group curvature -7/4"""
        beta = basis_element(1, 'beta_p', 1)
        ialpha = basis_element(1, 'ialpha_p', 1)
        assert quotient_sectional_curvature(beta, ialpha) == pytest.approx(-1.0, abs=1e-10)
        assert sectional_curvature(beta, ialpha, MetricSpec.scaled(1)) == pytest.approx(-1.75, abs=1e-10)

    def test_quotient_rejects_dependent(self, rng):
        """Dependent horizontal vectors are rejected"""
        X = random_element(2, rng, part='p')
        with pytest.raises(DegeneratePlaneError):
            quotient_sectional_curvature(X, -3.0 * X)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
