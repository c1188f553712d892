import numpy as np
import pytest

from altruist import GaussianBelief, sample_gaussian, sample_mixture
from altruist.distributions import TRIMODAL

BELIEF_1D = GaussianBelief([0.0], [[100.0]])
BELIEF_2D = GaussianBelief([0.0, 0.0], [[5.0, 1.5], [1.5, 1.0]])

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    """Collects one PASS/FAIL line per acceptance criterion for the summary."""
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def belief_1d():
    return BELIEF_1D


@pytest.fixture(scope="session")
def belief_2d():
    return BELIEF_2D


@pytest.fixture(scope="session")
def gauss1d_1e5():
    return sample_gaussian(BELIEF_1D, 10**5, 42)


@pytest.fixture(scope="session")
def gauss2d_1e5():
    return sample_gaussian(BELIEF_2D, 10**5, 42)


@pytest.fixture(scope="session")
def trimodal_samples():
    return sample_mixture(TRIMODAL, 99_999, 42)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
