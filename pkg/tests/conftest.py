from fractions import Fraction as F

import pytest

from convsemi import lp
from convsemi.algebra import SemilatticeInstance
from convsemi.polytope import box, canonicalize, unit_square

# filled by test_acceptance; printed after the run
ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def square():
    return SemilatticeInstance(unit_square())


@pytest.fixture(scope="session")
def box3():
    return SemilatticeInstance(box([0, 0, 0], [1, 1, 1]))


@pytest.fixture(scope="session")
def segment():
    return SemilatticeInstance(canonicalize([(F(0), F(0)), (F(1), F(0))]))


@pytest.fixture(params=sorted(lp.BACKENDS))
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
