from __future__ import annotations

import pytest

from fano_curves.models import builtin, builtin_names

R = {
    "R1": (0, 1, 1),
    "R2": (1, 0, 0),
    "R3": (1, 0, 2),
    "R4": (1, 2, 0),
    "R5": (1, 0, 1),
    "R6": (1, 1, 0),
}
L0 = (1, -2, 0)
L_INF = (1, 0, -2)


@pytest.fixture(scope="session")
def quartic():
    return builtin("quartic")


@pytest.fixture(scope="session")
def p_o_o2():
    return builtin("p_o_o2")


@pytest.fixture(scope="session")
def two_e5():
    return builtin("two_e5")


@pytest.fixture(scope="session", params=builtin_names())
def model(request):
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
