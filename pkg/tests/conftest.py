import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from isq import builders

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repo", derandomize=True, max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def I2():
    return builders.symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def I3():
    return builders.symmetric_inverse_monoid(3)


@pytest.fixture(scope="session")
def S6():
    return builders.example_S6()


@pytest.fixture(scope="session")
def T():
    return builders.example_T()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
