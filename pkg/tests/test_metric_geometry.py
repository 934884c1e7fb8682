"""
Tests for the Killing form, metrics, frames and Wang constants
"""
import numpy as np
import pytest

from chorbifold.exceptions import InvalidParameterError, ShapeError
from chorbifold.metric_geometry import (
    MetricSpec,
    ad_operator_norm,
    cartan_ad_rayleigh_bound,
    frame_coordinates,
    frame_structure_constants,
    gram_discrepancies,
    gram_matrix,
    inner_product,
    killing_form,
    killing_form_closed,
    norm,
    orthonormal_frame,
    wang_constants,
)
from chorbifold.su_algebra import (
    basis_element,
    bracket,
    h_slice,
    part_masks,
    random_element,
    standard_basis,
)


class TestMetricSpec:
    """MetricSpec construction"""

    def test_scales(self):
        """Canonical scale is 1, scaled is 1/(n+1)"""
        assert MetricSpec.canonical(3).scale == 1.0
        assert MetricSpec.scaled(3).scale == pytest.approx(0.25)

    def test_rescaled(self):
        """rescaled multiplies the factor"""
        m = MetricSpec.scaled(1).rescaled(4.0)
        assert m.scale == pytest.approx(2.0)
        assert str(m) == 'scaledx4'
        assert str(MetricSpec.canonical(1)) == 'canonical'

    def test_invalid_variant(self):
        """Unknown variants are rejected"""
        with pytest.raises(InvalidParameterError):
            MetricSpec('bergman', 2)

    def test_invalid_factor(self):
        """The factor must be positive"""
        with pytest.raises(InvalidParameterError):
            MetricSpec('canonical', 2, factor=0.0)

    def test_hashable(self):
        """Specs are usable as cache keys"""
        assert MetricSpec.scaled(2) == MetricSpec('scaled', 2)
        assert len({MetricSpec.scaled(2), MetricSpec('scaled', 2)}) == 1


class TestKillingForm:
    """Killing form from structure constants against 2(n+1) tr(XY)"""

    def test_closed_form_agrees(self, small_n, rng):
        """tr(ad X ad Y) = 2(n+1) tr(XY) over seeded pairs"""
        for _ in range(20):
            X = random_element(small_n, rng)
            Y = random_element(small_n, rng)
            B = killing_form(X, Y)
            assert abs(B - killing_form_closed(X, Y)) / max(1.0, abs(B)) < 1e-9

    def test_signs_on_parts(self, rng):
        """Negative definite on k, positive definite on p"""
        for _ in range(10):
            K = random_element(2, rng, part='k')
            P = random_element(2, rng, part='p')
            assert killing_form(K, K) < 0
            assert killing_form(P, P) > 0

    def test_symmetric(self, rng):
        """B(X, Y) = B(Y, X)"""
        X = random_element(3, rng)
        Y = random_element(3, rng)
        assert killing_form(X, Y) == pytest.approx(killing_form(Y, X), rel=1e-12)

    def test_dimension_mismatch(self):
        """Elements of different n cannot be paired"""
        with pytest.raises(ShapeError):
            killing_form(basis_element(1, 'h', 1), basis_element(2, 'h', 1))


class TestInnerProduct:
    """Metric inner products"""

    def test_h_norm_canonical(self):
        """<h_1, h_1> = 4(n+1) under g"""
        h1 = basis_element(2, 'h', 1)
        assert inner_product(h1, h1, MetricSpec.canonical(2)) == pytest.approx(12.0)

    def test_parts_orthogonal(self, rng):
        """k and p are orthogonal"""
        K = random_element(2, rng, part='k')
        P = random_element(2, rng, part='p')
        assert inner_product(K, P, MetricSpec.canonical(2)) == 0.0

    def test_scaled_norm(self):
        """Basis vectors have norm 2 under the scaled metric"""
        beta = basis_element(3, 'beta_p', 2)
        assert norm(beta, MetricSpec.scaled(3)) == pytest.approx(2.0)

    def test_metric_dimension_checked(self):
        """A metric for another n is rejected"""
        with pytest.raises(ShapeError):
            inner_product(basis_element(1, 'h', 1), basis_element(1, 'h', 1), MetricSpec.canonical(2))


class TestGramMatrix:
    """Gram matrices of the standard basis"""

    @pytest.mark.parametrize('variant,diagonal', [('canonical', None), ('scaled', 4.0)])
    def test_diagonal(self, small_n, variant, diagonal):
        """Diagonal is 4n+4 under g and 4 under the scaled metric"""
        gram = gram_matrix(small_n, MetricSpec(variant, small_n)).entries
        expected = diagonal if diagonal is not None else 4 * small_n + 4
        assert np.allclose(np.diag(gram), expected, rtol=0, atol=1e-12)

    def test_off_diagonal(self, small_n):
        """Off the diagonal only (h_j, h_k) pairs are nonzero, equal to 2(n+1) * scale"""
        m = MetricSpec.canonical(small_n)
        gram = gram_matrix(small_n, m).entries
        block = h_slice(small_n)
        expected = np.zeros_like(gram)
        expected[block, block] = 2 * (small_n + 1)
        np.fill_diagonal(expected, 0.0)
        off_diagonal = gram - np.diag(np.diag(gram))
        assert np.allclose(off_diagonal, expected, rtol=0, atol=1e-12)

    def test_positive_definite(self, small_n):
        """The metric is positive definite"""
        gram = gram_matrix(small_n, MetricSpec.scaled(small_n)).entries
        assert np.min(np.linalg.eigvalsh(gram)) > 0

    def test_matches_inner_product(self):
        """Gram entries agree with pairwise inner products"""
        m = MetricSpec.canonical(2)
        basis = standard_basis(2)
        gram = gram_matrix(2, m).entries
        for i, X in enumerate(basis):
            for j, Y in enumerate(basis):
                assert gram[i, j] == pytest.approx(inner_product(X, Y, m), abs=1e-12)


class TestGramDiscrepancies:
    """Entries disagreeing with a purely diagonal Gram matrix"""

    def test_none_at_n1(self):
        """A single h direction gives no off-diagonal Cartan entries"""
        assert gram_discrepancies(1, MetricSpec.canonical(1)) == []

    def test_h_pair_at_n2(self):
        """n = 2: exactly the (h_1, h_2) entry, computed 6, claimed 0"""
        entries = gram_discrepancies(2, MetricSpec.canonical(2))
        assert len(entries) == 1
        entry = entries[0]
        assert (entry['row'], entry['col']) == ('h_1', 'h_2')
        assert entry['computed'] == pytest.approx(6.0)
        assert entry['claimed'] == 0.0

    def test_count_grows_with_n(self):
        """n(n-1)/2 Cartan pairs, at value 2 under the scaled metric"""
        entries = gram_discrepancies(4, MetricSpec.scaled(4))
        assert len(entries) == 6
        assert all(e['computed'] == pytest.approx(2.0) for e in entries)


class TestOrthonormalFrame:
    """Orthonormal frames"""

    @pytest.mark.parametrize('variant', ['canonical', 'scaled'])
    def test_orthonormal(self, small_n, variant):
        """F^T G F = I"""
        m = MetricSpec(variant, small_n)
        frame = orthonormal_frame(small_n, m)
        gram = gram_matrix(small_n, m).entries
        product = frame.vectors.T @ gram @ frame.vectors
        assert np.allclose(product, np.eye(len(product)), rtol=0, atol=1e-12)

    def test_change_of_basis_inverts(self):
        """to_frame and from_frame are inverse"""
        frame = orthonormal_frame(3, MetricSpec.scaled(3))
        coeffs = np.arange(15, dtype=float)
        assert np.allclose(frame.from_frame(frame.to_frame(coeffs)), coeffs)

    def test_preserves_parts(self):
        """Frame vectors do not mix k and p"""
        k_mask, p_mask = part_masks(3)
        vectors = orthonormal_frame(3, MetricSpec.canonical(3)).vectors
        assert not np.any(vectors[np.ix_(k_mask, p_mask)])
        assert not np.any(vectors[np.ix_(p_mask, k_mask)])

    def test_frame_structure_constants(self, rng):
        """Brackets in frame coordinates match matrix brackets"""
        m = MetricSpec.scaled(2)
        X = random_element(2, rng)
        Y = random_element(2, rng)
        cf = frame_structure_constants(2, m)
        x, y = frame_coordinates(X, m), frame_coordinates(Y, m)
        expected = frame_coordinates(bracket(X, Y), m)
        assert np.allclose(np.einsum('a,b,abc->c', x, y, cf), expected, atol=1e-10)


class TestWangConstants:
    """Suprema of ad operator norms"""

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_scaled_metric(self, n):
        """C1 = C2 = 1 under the scaled metric"""
        C1, C2 = wang_constants(n, MetricSpec.scaled(n), samples=50, seed=3)
        assert 0.999 <= C1 <= 1.001
        assert 0.999 <= C2 <= 1.001

    @pytest.mark.parametrize('n', [1, 2])
    def test_canonical_metric(self, n):
        """C1 = C2 = (n+1)^(-1/2) under the canonical metric"""
        C1, C2 = wang_constants(n, MetricSpec.canonical(n), samples=50, seed=3)
        assert abs(C1 - (n + 1) ** -0.5) < 1e-3
        assert abs(C2 - (n + 1) ** -0.5) < 1e-3

    def test_single_vector_is_lower_bound(self):
        """The operator norm of any unit p vector is at most C1"""
        m = MetricSpec.scaled(2)
        beta = basis_element(2, 'beta_p', 1)
        unit = beta / norm(beta, m)
        C1, _ = wang_constants(2, m, samples=20)
        assert ad_operator_norm(unit, m) <= C1 + 1e-12

    def test_invalid_samples(self):
        """samples must be a positive integer"""
        with pytest.raises(InvalidParameterError):
            wang_constants(1, MetricSpec.scaled(1), samples=0)

    @pytest.mark.parametrize('n', [1, 2, 5])
    def test_cartan_rayleigh_bound(self, n):
        """Closed-form torus supremum: 1 scaled, (n+1)^(-1/2) canonical"""
        assert cartan_ad_rayleigh_bound(n, MetricSpec.scaled(n)) == pytest.approx(1.0)
        assert cartan_ad_rayleigh_bound(n, MetricSpec.canonical(n)) == pytest.approx((n + 1) ** -0.5)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
