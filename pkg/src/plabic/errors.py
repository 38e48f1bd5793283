"""Exception types and the enumeration budget shared across the package."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 5_000_000
BUDGET_ENV_VAR = "WORKBENCH_BUDGET"


class WorkbenchError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(WorkbenchError, ValueError):
    """A precondition on an operation's input was violated."""


class BudgetExceededError(WorkbenchError, RuntimeError):
    """An enumeration would exceed the configured work budget."""


class EmbeddingViolation(WorkbenchError):
    """Exact planarity certification failed; carries the offending pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(WorkbenchError, ValueError):
    """A document failed schema or invariant checks on load."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


def budget_limit() -> int:
    """Current enumeration budget, overridable via WORKBENCH_BUDGET."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise InvalidInputError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


class Budget:
    """Mutable countdown of enumeration work units.

    Each unit is one examined state or candidate subset.  Exceeding the
    limit raises BudgetExceededError rather than silently truncating.
    """

    def __init__(self, limit: int | None = None):
        self.limit = budget_limit() if limit is None else limit
        self.used = 0

    def charge(self, units: int = 1) -> None:
        self.used += units
        if self.used > self.limit:
            raise BudgetExceededError(
                f"enumeration budget exceeded ({self.used} > {self.limit} units); "
                f"raise {BUDGET_ENV_VAR} to allow more work"
            )
