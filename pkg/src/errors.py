"""
Exception hierarchy shared by every module of the toolkit.
"""
from typing import Any, Dict, Optional


class SpectraError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(SpectraError, ValueError):
    """Malformed graph text (graph6, edge list, 0/1 grid)."""

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class InvalidInputError(SpectraError, ValueError):
    """Bad vertex, fixture, matrix kind or dimension."""


class PreconditionError(SpectraError, ValueError):
    """A named precondition of a construction does not hold."""

    def __init__(self, name: str, message: str, witness: Any = None):
        super().__init__(f"precondition '{name}' failed: {message}")
        self.name = name
        self.witness = witness


class InvariantViolation(SpectraError, RuntimeError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, what: str, routes: Optional[Dict[str, Any]] = None):
        detail = ""
        if routes:
            detail = "; " + ", ".join(f"{k}={v}" for k, v in routes.items())
        super().__init__(f"invariant violated: {what}{detail}")
        self.what = what
        self.routes = routes or {}
