import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile("ci", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@st.composite
def increasing_lists(draw, max_n=400, max_u=10**7):
    """A strictly increasing int64 array plus a universe above its last element."""
    U = draw(st.integers(1, max_u))
    n = draw(st.integers(1, min(U, max_n)))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    if draw(st.booleans()):
        S = np.sort(rng.choice(U, n, replace=False))
    else:
        start = int(rng.integers(0, U - n + 1))
        S = np.arange(start, start + n)
    return S.astype(np.int64), U


@pytest.fixture
def table5():
    return np.array([3, 4, 7, 13, 14, 15, 21, 25, 36, 38, 54, 62]), 64


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
