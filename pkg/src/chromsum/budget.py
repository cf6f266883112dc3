"""Search budgets shared by the exponential-time solvers."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

BUDGET_ENV = "CHROMSUM_BUDGET"


class BudgetExhausted(RuntimeError):
    """A search ran out of nodes or time before it could finish."""

    def __init__(self, message: str = "search budget exhausted", nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class Budget:
    """Node-count limit (preferred, reproducible) and optional wall-clock limit."""

    max_nodes: int | None = None
    max_seconds: float | None = None

    @classmethod
    def from_env(cls, default: int | None = None) -> "Budget":
        raw = os.environ.get(BUDGET_ENV)
        return cls(max_nodes=int(raw) if raw else default)


UNLIMITED = Budget()


class Meter:
    """Counts search nodes against a :class:`Budget`."""

    __slots__ = ("nodes", "_max", "_deadline")

    def __init__(self, budget: Budget | None):
        budget = budget or UNLIMITED
        self.nodes = 0
        self._max = budget.max_nodes
        self._deadline = (
            time.perf_counter() + budget.max_seconds if budget.max_seconds is not None else None
        )

    def tick(self) -> None:
        self.nodes += 1
        if self._max is not None and self.nodes > self._max:
            raise BudgetExhausted(f"node budget of {self._max} exhausted", self.nodes)
        # clock reads are comparatively slow; sample them
        if self._deadline is not None and not self.nodes & 1023:
            if time.perf_counter() > self._deadline:
                raise BudgetExhausted("time budget exhausted", self.nodes)
