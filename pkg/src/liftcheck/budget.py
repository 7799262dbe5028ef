"""Optional degree/time guardrails installed by the CLI around a task."""

from __future__ import annotations

import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded


@dataclass
class Budget:
    max_degree: Optional[int] = None
    deadline: Optional[float] = None  # time.monotonic() value

    def check(self, degree: Optional[int] = None) -> None:
        if self.max_degree is not None and degree is not None and degree > self.max_degree:
            raise BudgetExceeded(
                f"degree {degree} exceeds --max-degree {self.max_degree}"
            )
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("task exceeded --timeout")


_current: ContextVar[Optional[Budget]] = ContextVar("liftcheck_budget", default=None)


def current_budget() -> Optional[Budget]:
    return _current.get()


@contextmanager
def budget_scope(max_degree: Optional[int] = None, timeout: Optional[float] = None):
    b = Budget(
        max_degree=max_degree,
        deadline=time.monotonic() + timeout if timeout else None,
    )
    token = _current.set(b)
    try:
        yield b
    finally:
        _current.reset(token)
