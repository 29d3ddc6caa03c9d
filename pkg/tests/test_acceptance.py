"""The nine acceptance criteria, each under its time budget and with cold caches."""

import time

import pytest

from isq import suite

BUDGETS = [
    (suite.criterion_1, 1.0),
    (suite.criterion_2, 1.0),
    (suite.criterion_3, 5.0),
    (suite.criterion_4, 30.0),
    (suite.criterion_5, 60.0),
    (suite.criterion_6, 30.0),
    (suite.criterion_7, 5.0),
    (suite.criterion_8, 30.0),
    (suite.criterion_9, 120.0),
]

REPORT: list[str] = []


@pytest.mark.parametrize("criterion, budget", BUDGETS, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_criterion(criterion, budget):
    suite.clear_caches()
    t0 = time.perf_counter()
    result = criterion()
    wall = time.perf_counter() - t0
    within = wall < budget
    line = f"{'PASS' if result.passed and within else 'FAIL'} {result.name}: {result.detail} [{wall:.2f}s / {budget:.0f}s]"
    REPORT.append(line)
    print(line)
    assert result.passed, result.detail
    assert within, f"took {wall:.2f}s, budget {budget}s"
