import pytest

from knormal.field import GF
from knormal.parse import parse_poly

_acceptance = []


@pytest.fixture(scope="session")
def F2():
    return GF.make(2)


@pytest.fixture(scope="session")
def F3():
    return GF.make(3)


@pytest.fixture(scope="session")
def F4():
    return GF.make(2, 2)


@pytest.fixture(scope="session")
def F9():
    return GF.make(3, 2)


@pytest.fixture
def P():
    return parse_poly


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        _acceptance.append(f"{status}  {name}  ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance:
            terminalreporter.write_line(line)
