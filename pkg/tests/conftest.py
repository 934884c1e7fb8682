"""
Pytest configuration and fixtures
"""
import numpy as np
import pytest

from chorbifold.metric_geometry import MetricSpec
from chorbifold.utils import clear_cache


@pytest.fixture
def rng():
    """Seeded generator shared by sampling tests"""
    return np.random.default_rng(20240611)


@pytest.fixture(params=[1, 2, 3])
def small_n(request):
    """Complex dimensions cheap enough for exhaustive checks"""
    return request.param


@pytest.fixture
def canonical_metric():
    """Factory for the canonical metric g"""
    return MetricSpec.canonical


@pytest.fixture
def scaled_metric():
    """Factory for the scaled metric g / (n+1)"""
    return MetricSpec.scaled


@pytest.fixture
def fresh_cache():
    """Empty result cache before and after the test"""
    clear_cache()
    yield
    clear_cache()


@pytest.fixture
def invalid_dimensions():
    """Values rejected as a complex dimension"""
    return [0, -1, 1.5, '2', True, None]
