from __future__ import annotations

import pytest

from shalika.errors import GuardViolation
from shalika.verify import SUITES, run_verify


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all"])
def test_each_suite_passes(suite):
    report = run_verify(suite, 2, 2)
    assert report.passed, [c.to_json() for c in report.checks if not c.passed]
    assert report.to_json()["status"] == "pass"


def test_report_records_roots():
    doc = run_verify("roots", 2, 1).to_json()
    assert doc["roots"]["2"]["rho"] == [2, 1]
    assert len(doc["roots"]["2"]["gl_positive"]) == 6


@pytest.mark.parametrize("n_max, budget", [(0, 1), (7, 1), (2, -1), (2, 7)])
def test_budget_guards(n_max, budget):
    with pytest.raises(GuardViolation):
        run_verify("all", n_max, budget)


def test_unknown_suite():
    with pytest.raises(GuardViolation):
        run_verify("nope", 1, 1)
