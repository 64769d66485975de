import pytest
from hypothesis import HealthCheck, settings

from redindex import fixture

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def P2():
    return fixture("P2")


@pytest.fixture(scope="session")
def P3():
    return fixture("P3")


@pytest.fixture(scope="session")
def R4():
    return fixture("R4")


@pytest.fixture(scope="session")
def M3():
    return fixture("M3")


@pytest.fixture(scope="session")
def S5():
    return fixture("S5")


ACCEPTANCE = {}


def record_acceptance(number, title, passed, detail=""):
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
