"""
Unit tests for simple factors

Test Coverage:
- TC-FAC-001: Units and dimensions
- TC-FAC-002: Products and multiplication operators
- TC-FAC-003: Spectra and Jordan frames
- TC-FAC-004: Positivity tests
- TC-FAC-005: Automorphisms
- TC-FAC-006: Factory caching
"""
import numpy as np
import pytest

from factors import FactorFactory, FactorKind
from factors.matrix import HermitianFactor, SymmetricFactor
from factors.real import RealFactor
from factors.spin import SpinFactor

pytestmark = [pytest.mark.unit, pytest.mark.algebra]

ALL_FACTORS = [
    (FactorKind.RN, 3),
    (FactorKind.SPIN, 4),
    (FactorKind.SYM, 3),
    (FactorKind.HERM, 2),
]


def factor_of(kind, size):
    return FactorFactory.create_factor(kind, size)


class TestDimensions:
    """TC-FAC-001: Units and dimensions"""

    @pytest.mark.parametrize("kind,size,dim,rank", [
        (FactorKind.RN, 3, 3, 3),
        (FactorKind.SPIN, 4, 4, 2),
        (FactorKind.SYM, 3, 6, 3),
        (FactorKind.HERM, 2, 4, 2),
        (FactorKind.HERM, 3, 9, 3),
    ])
    def test_dim_and_rank(self, kind, size, dim, rank):
        factor = factor_of(kind, size)
        assert factor.dim == dim
        assert factor.rank == rank

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_unit_is_identity_for_product(self, kind, size):
        factor = factor_of(kind, size)
        x = np.random.default_rng(0).standard_normal(factor.dim)
        assert np.allclose(factor.product(factor.unit(), x), x, atol=1e-12)

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_trace_of_unit_is_rank(self, kind, size):
        factor = factor_of(kind, size)
        assert factor.trace(factor.unit()) == pytest.approx(factor.rank)

    def test_descriptor(self):
        assert factor_of(FactorKind.SPIN, 4).descriptor() == "spin:4"


class TestProducts:
    """TC-FAC-002: Products and multiplication operators"""

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_product_commutative(self, kind, size):
        factor = factor_of(kind, size)
        rng = np.random.default_rng(1)
        x, y = rng.standard_normal(factor.dim), rng.standard_normal(factor.dim)
        assert np.allclose(factor.product(x, y), factor.product(y, x), atol=1e-12)

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_jordan_identity(self, kind, size):
        """(x∘y)∘x² = x∘(y∘x²)"""
        factor = factor_of(kind, size)
        rng = np.random.default_rng(2)
        x, y = rng.standard_normal(factor.dim), rng.standard_normal(factor.dim)
        x2 = factor.product(x, x)
        left = factor.product(factor.product(x, y), x2)
        right = factor.product(x, factor.product(y, x2))
        assert np.allclose(left, right, atol=1e-10)

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_lmul_matrix_matches_product_and_is_symmetric(self, kind, size):
        factor = factor_of(kind, size)
        rng = np.random.default_rng(3)
        x, y = rng.standard_normal(factor.dim), rng.standard_normal(factor.dim)
        lx = factor.lmul_matrix(x)
        assert np.allclose(lx @ y, factor.product(x, y), atol=1e-12)
        assert np.allclose(lx, lx.T, atol=1e-12)

    def test_spin_product_formula(self):
        factor = SpinFactor(3)
        x = np.array([1.0, 2.0, 0.0])
        y = np.array([3.0, 0.0, 1.0])
        # (st + <u,v>, s v + t u)
        assert np.allclose(factor.product(x, y), [3.0, 6.0, 1.0])

    def test_sym_coordinates_round_trip_matrix(self):
        factor = SymmetricFactor(2)
        m = np.array([[1.0, 2.0], [2.0, 3.0]])
        x = factor.from_matrix(m)
        assert np.allclose(x, [1.0, 2.0 * np.sqrt(2.0), 3.0])
        assert np.allclose(factor.to_matrix(x), m)

    def test_herm_product_is_symmetrized_matrix_product(self):
        factor = HermitianFactor(2)
        a = np.array([[1.0, 1j], [-1j, 2.0]])
        b = np.array([[0.0, 1.0], [1.0, 1.0]], dtype=complex)
        got = factor.to_matrix(factor.product(factor.from_matrix(a), factor.from_matrix(b)))
        assert np.allclose(got, 0.5 * (a @ b + b @ a))

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_inner_is_trace_of_product(self, kind, size):
        factor = factor_of(kind, size)
        rng = np.random.default_rng(4)
        x, y = rng.standard_normal(factor.dim), rng.standard_normal(factor.dim)
        assert factor.inner(x, y) == pytest.approx(factor.trace(factor.product(x, y)), abs=1e-10)


class TestSpectra:
    """TC-FAC-003: Spectra and Jordan frames"""

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_reconstruction(self, kind, size):
        factor = factor_of(kind, size)
        x = np.random.default_rng(5).standard_normal(factor.dim)
        spectrum = factor.spectrum(x)
        assert np.all(np.diff(spectrum.eigenvalues) >= 0)
        assert np.allclose(spectrum.eigenvalues @ spectrum.idempotents, x, atol=1e-10)

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_frame_is_complete_orthogonal_idempotents(self, kind, size):
        factor = factor_of(kind, size)
        frame = factor.random_frame(np.random.default_rng(6))
        assert frame.shape == (factor.rank, factor.dim)
        assert np.allclose(frame.sum(axis=0), factor.unit(), atol=1e-10)
        for i, p in enumerate(frame):
            assert np.allclose(factor.product(p, p), p, atol=1e-10)
            for q in frame[i + 1:]:
                assert np.allclose(factor.product(p, q), 0.0, atol=1e-10)

    def test_spin_closed_form(self):
        spectrum = SpinFactor(3).spectrum(np.array([2.0, 1.0, 0.0]))
        assert np.allclose(spectrum.eigenvalues, [1.0, 3.0])
        assert np.allclose(spectrum.idempotents, [[0.5, -0.5, 0.0], [0.5, 0.5, 0.0]])

    def test_spin_unit_splits_along_first_direction(self):
        spectrum = SpinFactor(3).spectrum(np.array([1.0, 0.0, 0.0]))
        assert np.allclose(spectrum.eigenvalues, [1.0, 1.0])
        assert np.allclose(spectrum.idempotents.sum(axis=0), [1.0, 0.0, 0.0])

    def test_real_spectrum_sorts(self):
        spectrum = RealFactor(3).spectrum(np.array([3.0, -1.0, 2.0]))
        assert np.allclose(spectrum.eigenvalues, [-1.0, 2.0, 3.0])
        assert np.allclose(spectrum.idempotents[0], [0.0, 1.0, 0.0])

    def test_hermitian_eigenvalues_match_numpy(self):
        factor = HermitianFactor(3)
        x = np.random.default_rng(7).standard_normal(factor.dim)
        expected = np.linalg.eigvalsh(factor.to_matrix(x))
        assert np.allclose(factor.spectrum(x).eigenvalues, expected, atol=1e-10)


class TestPositivity:
    """TC-FAC-004: Positivity tests"""

    def test_orthant(self):
        factor = RealFactor(2)
        assert factor.is_positive(np.array([1.0, 0.5]))
        assert not factor.is_positive(np.array([1.0, 0.0]))
        assert not factor.is_positive(np.array([1.0, 0.5]), shift=0.5)

    def test_lorentz_cone(self):
        factor = SpinFactor(3)
        assert factor.is_positive(np.array([2.0, 1.0, 1.0]))
        assert not factor.is_positive(np.array([1.0, 1.0, 0.0]))
        assert not factor.is_positive(np.array([-1.0, 0.0, 0.0]))

    def test_psd_cone(self):
        factor = SymmetricFactor(2)
        assert factor.is_positive(factor.from_matrix(np.array([[2.0, 1.0], [1.0, 2.0]])))
        assert not factor.is_positive(factor.from_matrix(np.array([[1.0, 1.0], [1.0, 1.0]])))
        assert not factor.is_positive(factor.from_matrix(np.eye(2)), shift=1.5)


class TestAutomorphisms:
    """TC-FAC-005: Automorphisms"""

    @pytest.mark.parametrize("kind,size", ALL_FACTORS)
    def test_random_automorphism_is_multiplicative_and_orthogonal(self, kind, size):
        factor = factor_of(kind, size)
        rng = np.random.default_rng(8)
        m = factor.random_automorphism(rng)
        x, y = rng.standard_normal(factor.dim), rng.standard_normal(factor.dim)
        assert np.allclose(m @ factor.product(x, y), factor.product(m @ x, m @ y), atol=1e-10)
        assert np.allclose(m.T @ m, np.eye(factor.dim), atol=1e-10)
        assert np.allclose(m @ factor.unit(), factor.unit(), atol=1e-10)


class TestFactorFactory:
    """TC-FAC-006: Factory caching"""

    def test_instances_are_cached(self):
        assert FactorFactory.create_factor(FactorKind.SYM, 2) is FactorFactory.create_factor(FactorKind.SYM, 2)

    def test_equality_by_kind_and_size(self):
        assert SymmetricFactor(3) == factor_of(FactorKind.SYM, 3)
        assert SymmetricFactor(3) != HermitianFactor(3)

    def test_clear_cache(self):
        first = FactorFactory.create_factor(FactorKind.RN, 5)
        FactorFactory.clear_cache()
        assert FactorFactory.create_factor(FactorKind.RN, 5) is not first
