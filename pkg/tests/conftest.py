from fractions import Fraction as Q

import pytest

# Two vertices of GT_(5,4,2,0): one with a cyclic equality graph, one simplicial.
CYCLIC_VERTEX = ((5, 4, 2, 0), (4, 4, 0), (4, 0), (4,))
SIMPLICIAL_VERTEX = ((5, 4, 2, 0), (5, 4, 0), (4, 0), (4,))


@pytest.fixture
def x23():
    return (Q(2), Q(3))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
