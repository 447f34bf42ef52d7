"""
Unit tests for cone metrics, geodesics and means

Test Coverage:
- TC-MET-001: Cone membership and ConePoint validation
- TC-MET-002: Gauge and its bisection oracle
- TC-MET-003: Thompson, Hilbert and Riemannian distances
- TC-MET-004: Geodesics and means
- TC-MET-005: Rescaled metrics and their limits
- TC-MET-006: Sup law on products
"""
import math

import numpy as np
import pytest

from algebra import jordan_det, jordan_trace, quad_rep, random_cone_point, random_element
from cone_metrics import (
    ConePoint,
    MetricKind,
    cone_membership,
    distance,
    gauge,
    gauge_bruteforce,
    geodesic_midpoint_refinement,
    geometric_mean,
    hilbert_distance,
    limit_norm,
    normalize_det,
    product_sup_law_check,
    relative_position,
    rescaled_convergence,
    rescaled_distance,
    riemannian_distance,
    riemannian_geodesic,
    riemannian_inner,
    spectral_mean,
    thompson_distance,
)
from exceptions import DomainError, NotAProductError, NotInConeError, NotTraceZeroError
from reports import Verdict
from spectral import jordan_inverse, jordan_sqrt

pytestmark = [pytest.mark.unit, pytest.mark.metrics]


class TestMembership:
    """TC-MET-001: Cone membership and ConePoint validation"""

    def test_interior_point_accepted(self, rn3):
        point = ConePoint.of(rn3.element([1.0, 2.0, 4.0]))
        assert point.min_eigenvalue == pytest.approx(1.0)
        assert point.algebra == rn3

    def test_boundary_point_rejected(self, spin3):
        with pytest.raises(NotInConeError) as exc_info:
            ConePoint.of(spin3.element([1.0, 1.0, 0.0]))
        assert exc_info.value.min_eigenvalue == pytest.approx(0.0)

    def test_cone_point_passes_through(self, rn3):
        point = ConePoint.of(rn3.unit)
        assert ConePoint.of(point) is point

    def test_lazy_min_eigenvalue(self, spin3):
        point = ConePoint(spin3.element([2.0, 1.0, 0.0]))
        assert point.min_eigenvalue == pytest.approx(1.0)

    @pytest.mark.parametrize("coords,expected", [
        ([2.0, 1.0, 1.0], True),
        ([1.0, 1.0, 0.0], False),
        ([1.0, 0.0, 1.5], False),
    ])
    def test_spin_membership(self, spin3, coords, expected):
        assert cone_membership(spin3.element(coords)) is expected

    def test_membership_matches_eigenvalues(self, any_algebra):
        x = random_element(any_algebra, 3)
        from spectral import min_eigenvalue
        assert cone_membership(x, tol=0.0) == (min_eigenvalue(x) > 0.0)
        assert cone_membership(random_cone_point(any_algebra, 4))


class TestGauge:
    """TC-MET-002: Gauge and its bisection oracle"""

    def test_orthant_gauge_is_max_ratio(self, rn3):
        p = rn3.element([1.0, 2.0, 4.0])
        q = rn3.element([2.0, 1.0, 1.0])
        assert gauge(p, q) == pytest.approx(4.0)
        assert gauge(q, p) == pytest.approx(2.0)

    def test_bruteforce_agrees(self, cone_pair):
        p, q = cone_pair
        exact = gauge(p, q)
        assert gauge_bruteforce(p, q) == pytest.approx(exact, rel=1e-7)

    def test_bruteforce_early_stop(self, rn3):
        p = rn3.element([1.0, 2.0, 4.0])
        q = rn3.element([2.0, 1.0, 1.0])
        assert abs(gauge_bruteforce(p, q, tol=1e-3) - 4.0) <= 1e-3

    def test_gauge_of_equal_points_is_one(self, any_algebra):
        a = random_cone_point(any_algebra, 5)
        assert gauge(a, a) == pytest.approx(1.0, abs=1e-10)

    def test_gauge_formulas(self, cone_pair):
        a, b = cone_pair
        m_ab, m_ba = gauge(a, b), gauge(b, a)
        assert thompson_distance(a, b) == pytest.approx(math.log(max(m_ab, m_ba)), abs=1e-9)
        assert hilbert_distance(a, b) == pytest.approx(math.log(m_ab * m_ba), abs=1e-9)


class TestDistances:
    """TC-MET-003: Thompson, Hilbert and Riemannian distances"""

    def test_orthant_worked_example(self, rn3):
        a = rn3.element([1.0, 2.0, 4.0])
        b = rn3.element([2.0, 1.0, 1.0])
        assert thompson_distance(a, b) == pytest.approx(math.log(4.0), abs=1e-12)
        assert hilbert_distance(a, b) == pytest.approx(math.log(8.0), abs=1e-12)
        assert riemannian_distance(a, b) == pytest.approx(math.log(2.0) * math.sqrt(6.0), abs=1e-12)

    def test_lorentz_worked_example(self, spin3):
        b = spin3.element([2.0, 1.0, 0.0])
        assert thompson_distance(spin3.unit, b) == pytest.approx(math.log(3.0), abs=1e-12)
        assert hilbert_distance(spin3.unit, b) == pytest.approx(math.log(3.0), abs=1e-12)

    def test_zero_distance_to_self(self, any_algebra):
        a = random_cone_point(any_algebra, 6)
        for kind in MetricKind:
            assert distance(kind, a, a) == 0.0

    def test_symmetric(self, cone_pair):
        a, b = cone_pair
        for kind in MetricKind:
            assert distance(kind, a, b) == pytest.approx(distance(kind, b, a), abs=1e-10)

    def test_hilbert_ignores_scaling(self, cone_pair):
        a, b = cone_pair
        assert hilbert_distance(3.0 * a, 0.5 * b) == pytest.approx(hilbert_distance(a, b), abs=1e-10)
        assert hilbert_distance(a, 7.0 * a) == 0.0

    def test_thompson_of_scaling(self, any_algebra):
        a = random_cone_point(any_algebra, 7)
        assert thompson_distance(a, 5.0 * a) == pytest.approx(math.log(5.0), abs=1e-10)

    def test_quad_rep_is_isometry(self, cone_pair, any_algebra):
        a, b = cone_pair
        g = quad_rep(random_cone_point(any_algebra, 8))
        for kind in MetricKind:
            assert distance(kind, g(a), g(b)) == pytest.approx(distance(kind, a, b), abs=1e-7)

    def test_inversion_is_isometry(self, cone_pair):
        a, b = cone_pair
        for kind in MetricKind:
            got = distance(kind, jordan_inverse(a), jordan_inverse(b))
            assert got == pytest.approx(distance(kind, a, b), abs=1e-9)

    def test_relative_position_of_unit(self, any_algebra):
        b = random_cone_point(any_algebra, 9)
        pytest.assert_close_elements(relative_position(any_algebra.unit, b), b, tol=1e-12)

    def test_rejects_points_outside_cone(self, rn3):
        with pytest.raises(NotInConeError):
            thompson_distance(rn3.unit, rn3.element([1.0, -1.0, 1.0]))


class TestGeodesicsAndMeans:
    """TC-MET-004: Geodesics and means"""

    def test_orthant_geometric_mean(self, rn3):
        a = rn3.element([1.0, 4.0, 9.0])
        b = rn3.element([4.0, 1.0, 1.0])
        assert np.allclose(geometric_mean(a, b).coords, [2.0, 2.0, 3.0])
        assert np.allclose(spectral_mean(a, b).coords, [2.0, 2.0, 3.0])

    def test_geometric_mean_equation(self, cone_pair):
        a, b = cone_pair
        x = geometric_mean(a, b).element
        pytest.assert_close_elements(quad_rep(x)(jordan_inverse(a)), b, tol=1e-9)

    def test_geometric_mean_symmetric(self, cone_pair):
        a, b = cone_pair
        pytest.assert_close_elements(geometric_mean(a, b).element, geometric_mean(b, a).element, tol=1e-9)

    def test_spectral_mean_equation(self, cone_pair):
        a, b = cone_pair
        x = spectral_mean(a, b).element
        left = jordan_sqrt(geometric_mean(jordan_inverse(a), b).element)
        pytest.assert_close_elements(left, geometric_mean(jordan_inverse(a), x).element, tol=1e-9)

    def test_geodesic_endpoints_and_midpoint(self, cone_pair):
        a, b = cone_pair
        pytest.assert_close_elements(riemannian_geodesic(a, b, 0.0).element, a, tol=1e-10)
        pytest.assert_close_elements(riemannian_geodesic(a, b, 1.0).element, b, tol=1e-9)
        pytest.assert_close_elements(riemannian_geodesic(a, b, 0.5).element, geometric_mean(a, b).element, tol=1e-9)

    def test_geodesic_constant_speed(self, cone_pair):
        a, b = cone_pair
        full = riemannian_distance(a, b)
        point = riemannian_geodesic(a, b, 0.3)
        assert riemannian_distance(a, point) == pytest.approx(0.3 * full, abs=1e-9)
        assert riemannian_distance(point, b) == pytest.approx(0.7 * full, abs=1e-9)

    def test_midpoint_refinement(self, sym2):
        a = random_cone_point(sym2, 10)
        b = random_cone_point(sym2, 11)
        points = geodesic_midpoint_refinement(a, b, 2)
        assert len(points) == 5
        for k, point in enumerate(points):
            pytest.assert_close_elements(point.element, riemannian_geodesic(a, b, k / 4).element, tol=1e-9)

    def test_normalize_det(self, any_algebra):
        a = random_cone_point(any_algebra, 12)
        n = normalize_det(a).element
        assert jordan_det(n) == pytest.approx(1.0, abs=1e-10)
        pytest.assert_close_elements(normalize_det(4.0 * a).element, n, tol=1e-10)

    def test_riemannian_inner_at_unit_is_trace_form(self, any_algebra):
        from algebra import trace_form
        u = random_element(any_algebra, 13)
        v = random_element(any_algebra, 14)
        assert riemannian_inner(any_algebra.unit, u, v) == pytest.approx(trace_form(u, v), abs=1e-10)


class TestRescaledLimits:
    """TC-MET-005: Rescaled metrics and their limits"""

    def test_commuting_pair_is_exact(self, rn3):
        u = rn3.element([0.5, -1.0, 0.5])
        v = rn3.element([1.0, 1.0, -2.0])
        for kind in MetricKind:
            assert rescaled_distance(kind, 1e-2, u, v) == pytest.approx(limit_norm(kind, v - u), abs=1e-10)

    def test_hilbert_limit_on_trace_zero(self, sym2):
        u = sym2.trace_zero_projection(random_element(sym2, 15))
        v = sym2.trace_zero_projection(random_element(sym2, 16))
        got = rescaled_distance(MetricKind.HILBERT, 1e-3, u, v)
        assert got == pytest.approx(limit_norm(MetricKind.HILBERT, v - u), abs=1e-3)

    def test_hilbert_requires_trace_zero(self, sym2):
        with pytest.raises(NotTraceZeroError):
            rescaled_distance(MetricKind.HILBERT, 0.1, sym2.unit, sym2.zero())

    @pytest.mark.parametrize("lam", [0.0, -1.0])
    def test_lambda_must_be_positive(self, sym2, lam):
        with pytest.raises(DomainError):
            rescaled_distance(MetricKind.THOMPSON, lam, sym2.zero(), sym2.unit)

    def test_convergence_errors_shrink(self, sym_matrix, sym2):
        u = sym_matrix(sym2, [[1.0, 0.0], [0.0, -1.0]])
        v = sym_matrix(sym2, [[0.0, 1.0], [1.0, 0.0]])
        result = rescaled_convergence(MetricKind.THOMPSON, u, v)
        errors = result["errors"]
        assert errors[0] > errors[1] > errors[2] or errors[2] < 1e-12
        assert result["limit"][0] == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert len(result["ratios"]) == 2

    def test_limit_norms(self, rn3):
        w = rn3.element([1.0, -3.0, 2.0])
        assert limit_norm(MetricKind.THOMPSON, w) == pytest.approx(3.0)
        assert limit_norm(MetricKind.HILBERT, w) == pytest.approx(5.0)
        assert limit_norm(MetricKind.RIEMANNIAN, w) == pytest.approx(math.sqrt(14.0))


class TestSupLaw:
    """TC-MET-006: Sup law on products"""

    def test_product_records(self, rn1x1):
        report = product_sup_law_check(rn1x1, trials=5, seed=0)
        sup = report.get("products.thompson_sup_law")
        hilbert = report.get("products.hilbert_sup_law_fails")
        pytest.assert_record_passed(sup)
        assert hilbert.verdict == Verdict.WITNESS
        assert hilbert.witness["product"] == pytest.approx(math.log(2.0))
        assert hilbert.witness["factorMax"] == pytest.approx(0.0)

    def test_mixed_product(self, product_algebra):
        report = product_sup_law_check(product_algebra, trials=3, seed=1)
        assert report.all_passed

    def test_single_factor_rejected(self, sym3):
        with pytest.raises(NotAProductError):
            product_sup_law_check(sym3, trials=1)

    def test_trace_helper_consistency(self, product_algebra):
        assert jordan_trace(product_algebra.unit) == product_algebra.rank
