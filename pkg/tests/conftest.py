"""
Pytest configuration and shared fixtures

Provides algebra fixtures, marks, hypothesis profiles and numeric assertions
for all tests.
"""
import os

import numpy as np
import pytest

from algebra import Element, make_algebra, random_cone_point


# ============================================================================
# Pytest Configuration
# ============================================================================

def pytest_configure(config):
    """Configure custom pytest markers"""
    config.addinivalue_line(
        "markers", "unit: Unit tests (fast, isolated)"
    )
    config.addinivalue_line(
        "markers", "integration: Integration tests (CLI end to end)"
    )
    config.addinivalue_line(
        "markers", "property: Property-based tests (Hypothesis)"
    )
    config.addinivalue_line(
        "markers", "slow: Slow tests (>1s)"
    )
    config.addinivalue_line(
        "markers", "algebra: Factor and algebra tests"
    )
    config.addinivalue_line(
        "markers", "spectral: Eigensolver and spectral calculus tests"
    )
    config.addinivalue_line(
        "markers", "metrics: Cone metric and mean tests"
    )
    config.addinivalue_line(
        "markers", "isometries: Isometry catalogue tests"
    )
    config.addinivalue_line(
        "markers", "idempotents: Idempotent combinatorics tests"
    )
    config.addinivalue_line(
        "markers", "suites: Verification suite tests"
    )
    config.addinivalue_line(
        "markers", "reports: Report serialization tests"
    )
    config.addinivalue_line(
        "markers", "validation: Validation module tests"
    )
    config.addinivalue_line(
        "markers", "logging: Logging tests"
    )
    config.addinivalue_line(
        "markers", "cli: Command-line tests"
    )


# ============================================================================
# Shared Fixtures
# ============================================================================

@pytest.fixture
def rn3():
    return make_algebra("rn:3")


@pytest.fixture
def rn1x1():
    """Smallest product algebra, rank 2 with two factors"""
    return make_algebra("rn:1 x rn:1")


@pytest.fixture
def spin3():
    return make_algebra("spin:3")


@pytest.fixture
def spin4():
    return make_algebra("spin:4")


@pytest.fixture
def sym2():
    return make_algebra("sym:2")


@pytest.fixture
def sym3():
    return make_algebra("sym:3")


@pytest.fixture
def herm2():
    return make_algebra("herm:2")


@pytest.fixture
def product_algebra():
    """Mixed product of rank 5"""
    return make_algebra("sym:3 x spin:4")


@pytest.fixture(params=["rn:3", "spin:4", "sym:3", "herm:2", "sym:2 x spin:3"])
def any_algebra(request):
    """One algebra per factor kind plus a mixed product"""
    return make_algebra(request.param)


@pytest.fixture
def cone_pair(any_algebra):
    """Two seeded interior points of the same algebra"""
    return random_cone_point(any_algebra, 11), random_cone_point(any_algebra, 12)


@pytest.fixture
def sym_matrix():
    """Encode a real symmetric 2x2 or 3x3 matrix as SYM coordinates"""
    def encode(algebra, m):
        factor = algebra.factors[0]
        return Element(algebra, factor.from_matrix(np.asarray(m, dtype=float)))
    return encode


# ============================================================================
# Hypothesis Configuration
# ============================================================================

from hypothesis import settings, Verbosity

# Configure Hypothesis profiles
settings.register_profile("ci", max_examples=100, verbosity=Verbosity.verbose, deadline=None)
settings.register_profile("dev", max_examples=10, deadline=None)
settings.register_profile("thorough", max_examples=1000, verbosity=Verbosity.verbose, deadline=None)
settings.register_profile("default", max_examples=25, deadline=None)

# Load profile from environment or use default
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


# ============================================================================
# Custom Assertions
# ============================================================================

def assert_close_elements(x, y, tol=1e-9):
    """Assert two elements agree coordinate-wise up to tol (relative to scale)"""
    assert x.algebra == y.algebra
    scale = max(1.0, float(np.max(np.abs(x.coords))), float(np.max(np.abs(y.coords))))
    assert x.distance_to(y) <= tol * scale, f"{x} != {y}"


def assert_in_cone(x, tol=0.0):
    """Assert that every eigenvalue of x exceeds tol"""
    from spectral import min_eigenvalue
    assert min_eigenvalue(x) > tol


def assert_record_passed(record):
    """Assert that a check record met its expected verdict"""
    assert record.passed, (
        f"{record.check_id}: {record.verdict.value} (expected {record.expected.value}), "
        f"max error {record.max_error:.3e}, witness {record.witness}"
    )


# Make custom assertions available to tests
pytest.assert_close_elements = assert_close_elements
pytest.assert_in_cone = assert_in_cone
pytest.assert_record_passed = assert_record_passed
