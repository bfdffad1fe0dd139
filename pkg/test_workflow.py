"""
Tests for the verification workflow, its state and the check base class.
"""
import sys
import os

import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(__file__))

from src.checks import FixtureCheck
from src.checks.base_check import BaseCheck
from src.errors import InvariantViolation
from src.reporting.templates import render_check, render_summary
from src.verification.state import STAGES, CheckResult, create_initial_state
from src.verification.workflow import VerificationWorkflow


class FakeCheck(BaseCheck):
    """Records one check that passes or fails on demand."""

    def __init__(self, stage: str, passed: bool = True):
        super().__init__()
        self.stage = stage
        self.passed = passed
        self.calls = 0

    def checks(self, state) -> None:
        self.calls += 1
        self.record(f"{self.stage} check", self._check)

    def _check(self) -> str:
        assert self.passed, "forced failure"
        return "fine"


def fake_checks(failing=()):
    return {stage: FakeCheck(stage, passed=stage not in failing) for stage in STAGES}


def test_initial_state():
    state = create_initial_state(seed=3, instances=5, census_max_order=4)
    assert state["seed"] == 3 and state["instances"] == 5
    assert state["results"] == [] and state["failed_stages"] == []
    assert not state["is_complete"] and state["summary"] is None


def test_initial_state_rejects_large_census():
    with pytest.raises(ValueError):
        create_initial_state(census_max_order=8)
    with pytest.raises(ValueError):
        create_initial_state(census_max_order=0)


def test_all_stages_run_in_order():
    checks = fake_checks()
    state = VerificationWorkflow(checks).run(create_initial_state(seed=1))
    assert state["is_complete"]
    assert [r.stage for r in state["results"]] == STAGES
    summary = state["summary"]
    assert summary["total"] == summary["passed"] == len(STAGES)
    assert summary["stages_run"] == STAGES and summary["stages_skipped"] == []
    assert all(c.calls == 1 for c in checks.values())


def test_failure_without_fail_fast_runs_everything():
    state = VerificationWorkflow(fake_checks(failing=("wronskian",))).run(create_initial_state(seed=1))
    summary = state["summary"]
    assert summary["failed"] == 1
    assert summary["failed_stages"] == ["wronskian"]
    assert summary["stages_run"] == STAGES


def test_fail_fast_skips_to_summary():
    checks = fake_checks(failing=("controllability",))
    state = VerificationWorkflow(checks).run(create_initial_state(seed=1, fail_fast=True))
    summary = state["summary"]
    assert summary["stages_run"] == ["fixtures", "wronskian", "controllability"]
    assert summary["stages_skipped"] == ["cospectral", "properties", "census"]
    assert checks["census"].calls == 0
    assert state["current_stage"] == "summary"


def test_record_catches_check_failures():
    check = FakeCheck("fixtures", passed=False)
    failed = check.record("assertion", check._check)
    assert not failed.passed and "forced failure" in failed.detail

    def violation():
        raise InvariantViolation("routes disagree", {"a": 1, "b": 2})

    result = check.record("invariant", violation)
    assert not result.passed and result.detail.startswith("InvariantViolation")
    with pytest.raises(ZeroDivisionError):
        check.record("bug", lambda: 1 // 0)


def test_stage_rng_is_reproducible():
    state = create_initial_state(seed=42)
    a, b = FakeCheck("properties"), FakeCheck("properties")
    assert a.rng(state).random() == b.rng(state).random()
    assert a.rng(state).random() != FakeCheck("census").rng(state).random()


def test_fixture_stage_passes():
    results = FixtureCheck().run(create_initial_state(seed=1))
    assert results and all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_rendering():
    ok = CheckResult(stage="fixtures", name="sample", passed=True, detail="x", seconds=0.5)
    bad = CheckResult(stage="census", name="row 6", passed=False, detail="mismatch", seconds=1.0)
    assert "[ok]" in render_check(ok) and "x" not in render_check(ok).split("sample")[1]
    assert "mismatch" in render_check(bad)
    summary = {"total": 2, "passed": 1, "failed_stages": ["census"], "stages_skipped": [], "seconds": 1.5}
    text = render_summary(summary, [ok, bad])
    assert "1/2" in text and "census" in text
