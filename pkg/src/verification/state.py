"""
State management for the verification run using LangGraph.
Defines the state that flows through the check stages.
"""
from typing import Dict, List, Literal, Optional, TypedDict

from pydantic import BaseModel, ConfigDict

from config import settings

Stage = Literal["fixtures", "wronskian", "controllability", "cospectral", "properties", "census", "summary"]

STAGES: List[str] = ["fixtures", "wronskian", "controllability", "cospectral", "properties", "census"]


class CheckResult(BaseModel):
    """Outcome of one named check inside a stage."""
    model_config = ConfigDict(frozen=True)

    stage: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


class VerificationState(TypedDict):
    """
    State for the verification workflow.

    Attributes:
        seed: seed of every randomized suite in the run
        instances: instance count per randomized suite
        census_max_order: largest census order compared with the reference table
        fail_fast: stop after the first stage with a failing check
        current_stage: the stage that ran last
        results: every CheckResult so far, in execution order
        failed_stages: stages with at least one failing check
        is_complete: whether the summary has been produced
        summary: totals computed by the summary stage
    """
    seed: int
    instances: int
    census_max_order: int
    fail_fast: bool
    current_stage: Stage
    results: List[CheckResult]
    failed_stages: List[str]
    is_complete: bool
    summary: Optional[Dict]


def create_initial_state(
    seed: Optional[int] = None,
    instances: Optional[int] = None,
    census_max_order: int = 6,
    fail_fast: bool = False,
) -> VerificationState:
    """
    Create the initial state for a verification run.

    Args:
        seed: random seed, settings.DEFAULT_SEED when omitted
        instances: instances per randomized suite, settings.DEFAULT_INSTANCES when omitted
        census_max_order: census orders 1..census_max_order are compared with the table
        fail_fast: skip the remaining stages after a failure

    Returns:
        VerificationState: initial state
    """
    if not 1 <= census_max_order <= settings.BUILTIN_MAX_ORDER:
        raise ValueError(f"census_max_order must lie in 1..{settings.BUILTIN_MAX_ORDER}")
    return {
        "seed": settings.DEFAULT_SEED if seed is None else seed,
        "instances": settings.DEFAULT_INSTANCES if instances is None else instances,
        "census_max_order": census_max_order,
        "fail_fast": fail_fast,
        "current_stage": "fixtures",
        "results": [],
        "failed_stages": [],
        "is_complete": False,
        "summary": None,
    }
