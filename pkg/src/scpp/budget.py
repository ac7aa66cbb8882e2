"""Node budgets that keep brute-force enumerations at desk scale."""

from __future__ import annotations

DEFAULT_NODE_CAP = 100_000_000


class BudgetExceededError(RuntimeError):
    """An enumeration passed its node cap before finishing."""


class WorkBudget:
    """Mutable counter of enumeration nodes with a hard cap.

    Pass one instance through a single verification run; do not share
    across concurrent workers.
    """

    __slots__ = ("cap", "used")

    def __init__(self, cap: int = DEFAULT_NODE_CAP):
        if cap <= 0:
            raise ValueError("budget cap must be positive")
        self.cap = cap
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.cap:
            raise BudgetExceededError(
                f"work budget exceeded: {self.used} nodes > cap {self.cap}"
            )

    def __repr__(self) -> str:
        return f"WorkBudget(cap={self.cap}, used={self.used})"
