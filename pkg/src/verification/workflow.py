"""
LangGraph workflow that runs the verification stages in order.
"""
import time
from typing import Callable, Dict, Literal, Optional

from langgraph.graph import END, StateGraph

from config.logging_config import get_logger
from src.checks import (
    CensusCheck,
    ControllabilityCheck,
    CospectralCheck,
    FixtureCheck,
    PropertyCheck,
    WronskianCheck,
)
from src.checks.base_check import BaseCheck
from src.verification.state import STAGES, VerificationState

logger = get_logger(__name__)


class VerificationWorkflow:
    """Runs fixtures -> wronskian -> controllability -> cospectral -> properties -> census -> summary."""

    def __init__(self, checks: Optional[Dict[str, BaseCheck]] = None):
        """Build the graph; ``checks`` replaces the stage checks by stage name."""
        logger.info("Initializing Verification Workflow")
        self.checks: Dict[str, BaseCheck] = {
            "fixtures": FixtureCheck(),
            "wronskian": WronskianCheck(),
            "controllability": ControllabilityCheck(),
            "cospectral": CospectralCheck(),
            "properties": PropertyCheck(),
            "census": CensusCheck(),
        }
        self.checks.update(checks or {})
        self.graph = self._create_graph()

    def _create_graph(self):
        """
        Create the LangGraph workflow.

        Returns:
            Compiled workflow graph
        """
        workflow = StateGraph(VerificationState)

        for stage in STAGES:
            workflow.add_node(stage, self._stage_node(stage))
        workflow.add_node("summary", self._summary_node)

        # each stage either continues or, under fail_fast, jumps to the summary
        for stage, following in zip(STAGES, STAGES[1:] + ["summary"]):
            workflow.add_conditional_edges(
                stage,
                self._route,
                {"next": following, "summary": "summary"},
            )

        workflow.add_edge("summary", END)
        workflow.set_entry_point(STAGES[0])
        return workflow.compile()

    def _stage_node(self, stage: str) -> Callable[[VerificationState], VerificationState]:
        check = self.checks[stage]

        def node(state: VerificationState) -> VerificationState:
            logger.info(f"Stage {stage}: starting")
            start = time.perf_counter()
            results = check.run(state)
            failed = [r for r in results if not r.passed]
            logger.info(f"Stage {stage}: {len(results) - len(failed)}/{len(results)} passed "
                        f"in {time.perf_counter() - start:.1f}s")
            state["results"] = state["results"] + results
            if failed:
                state["failed_stages"] = state["failed_stages"] + [stage]
            state["current_stage"] = stage
            return state

        return node

    def _route(self, state: VerificationState) -> Literal["next", "summary"]:
        if state["fail_fast"] and state["failed_stages"]:
            logger.info(f"Fail-fast: skipping to summary after {state['current_stage']}")
            return "summary"
        return "next"

    def _summary_node(self, state: VerificationState) -> VerificationState:
        results = state["results"]
        passed = sum(r.passed for r in results)
        ran = []
        for r in results:
            if r.stage not in ran:
                ran.append(r.stage)
        state["summary"] = {
            "total": len(results),
            "passed": passed,
            "failed": len(results) - passed,
            "stages_run": ran,
            "stages_skipped": [s for s in STAGES if s not in ran],
            "failed_stages": list(state["failed_stages"]),
            "seconds": round(sum(r.seconds for r in results), 3),
        }
        state["current_stage"] = "summary"
        state["is_complete"] = True
        logger.info(f"Verification complete: {passed}/{len(results)} checks passed")
        return state

    def run(self, state: VerificationState) -> VerificationState:
        """Run every stage (or up to the first failure under fail_fast) and the summary."""
        return self.graph.invoke(state)
