"""
Base class for verification checks.
"""
import random
import time
from typing import Callable, List

from config.logging_config import get_logger
from src.errors import SpectraError
from src.verification.state import CheckResult, VerificationState

logger = get_logger(__name__)


class BaseCheck:
    """Base class for all check stages."""

    stage = "base"

    def __init__(self):
        self.results: List[CheckResult] = []

    def run(self, state: VerificationState) -> List[CheckResult]:
        """
        Run every check of the stage.

        Args:
            state: current verification state (seed, instance counts)

        Returns:
            List[CheckResult]: one result per check, in execution order
        """
        self.results = []
        self.checks(state)
        return self.results

    def checks(self, state: VerificationState) -> None:
        raise NotImplementedError

    def rng(self, state: VerificationState) -> random.Random:
        """A random source derived from the run seed and this stage's name."""
        return random.Random(f"{state['seed']}:{self.stage}")

    def record(self, name: str, check: Callable[[], str]) -> CheckResult:
        """
        Run one check and record its outcome.

        ``check`` returns a detail string on success and raises AssertionError or a
        SpectraError (including InvariantViolation) on failure.
        """
        start = time.perf_counter()
        try:
            detail = check() or ""
            passed = True
        except (AssertionError, SpectraError) as exc:
            detail = f"{type(exc).__name__}: {exc}"
            passed = False
        seconds = time.perf_counter() - start
        result = CheckResult(stage=self.stage, name=name, passed=passed, detail=detail, seconds=seconds)
        if passed:
            logger.debug(f"[{self.stage}] {name}: ok ({seconds:.2f}s)")
        else:
            logger.warning(f"[{self.stage}] {name}: FAILED - {detail}")
        self.results.append(result)
        return result
