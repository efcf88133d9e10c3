import pytest
from hypothesis import strategies as st

from gnswilf import kernels
from gnswilf.enumeration import random_gns
from gnswilf.gns import validate_hole_set

EXAF_HOLES = [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (3, 0), (3, 2)]
EXAF_GENS = {(2, 0), (5, 0), (0, 2), (0, 3), (1, 5), (1, 6), (3, 1), (4, 1)}
EXAF_N = {(0, 0), (2, 0), (3, 1), (0, 2), (2, 2), (0, 3), (0, 4)}

N5_HOLES = [(0, 0, 0, 1, 0), (0, 0, 0, 2, 0), (0, 1, 0, 0, 0), (0, 1, 0, 3, 0)]
SBAR_HOLES = [(0, 1), (0, 2), (1, 0), (1, 3)]
SBAR_GENS = {(1, 1), (0, 3), (1, 2), (0, 5), (0, 4), (2, 1), (2, 0), (3, 0)}


@pytest.fixture
def exaf():
    return validate_hole_set(2, EXAF_HOLES)


@pytest.fixture
def sbar():
    return validate_hole_set(2, SBAR_HOLES)


@pytest.fixture(params=[b.BACKEND for b in kernels.available_backends()])
def backend(request):
    """Run a test once per available kernel backend."""
    kernels.force_backend(request.param)
    yield request.param
    kernels.force_backend(None)


@st.composite
def small_gns(draw, max_dim=3, max_genus=8):
    d = draw(st.integers(1, max_dim))
    g = draw(st.integers(0, max_genus))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_gns(d, g, seed)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
