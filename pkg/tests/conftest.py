import pytest

from knotorder.homver import bundled_homs
from knotorder.words import TARGET_NAMES, bundled_knots

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def knots():
    return bundled_knots()


@pytest.fixture(scope="session")
def homs():
    return bundled_homs()


@pytest.fixture(scope="session")
def targets(knots):
    return {name: knots[name] for name in TARGET_NAMES}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
