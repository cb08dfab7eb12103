import pytest

from divbounds import DistributionPair, random_pair, ratio_bounds, validate


@pytest.fixture
def std_pair():
    """The worked reference pair used throughout the golden checks."""
    return DistributionPair(validate((0.5, 0.5)), validate((0.25, 0.75)))


@pytest.fixture
def std_rb(std_pair):
    return ratio_bounds(std_pair)


@pytest.fixture(scope="session")
def make_pairs():
    """Deterministic stream of random pairs cycling through dimensions."""

    def _make(count, seed=1000, min_dim=2, max_dim=64):
        span = max_dim - min_dim + 1
        for i in range(count):
            yield random_pair(min_dim + i % span, seed + i)

    return _make
