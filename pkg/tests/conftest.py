import sys

import pytest

from twistedhopf.operads import get_operad


@pytest.fixture(scope="session")
def As():
    return get_operad("as")


@pytest.fixture(scope="session")
def Com():
    return get_operad("com")


@pytest.fixture(scope="session")
def Lie():
    return get_operad("lie")


@pytest.fixture(scope="session")
def Pois():
    return get_operad("pois")


@pytest.fixture(scope="session")
def Mag2():
    return get_operad("mag2")


@pytest.fixture(scope="session")
def Mag3():
    return get_operad("mag3")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
