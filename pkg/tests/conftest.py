import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from chanorder.channel import Channel

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def distributions(draw, size):
    w = draw(st.lists(st.floats(0.0, 1.0, allow_subnormal=False), min_size=size, max_size=size))
    w = np.array(w) + 1e-3
    return w / w.sum()


@st.composite
def channels(draw, max_inputs=4, max_outputs=4, outputs=None):
    ny = outputs or draw(st.integers(1, max_outputs))
    nx = draw(st.integers(1, max_inputs))
    return Channel(np.array([draw(distributions(ny)) for _ in range(nx)]))


@pytest.fixture
def bsc01():
    from chanorder.channel import bsc
    return bsc(0.1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
