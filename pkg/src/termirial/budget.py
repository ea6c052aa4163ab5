"""Work guards shared by the brute-force and figure-building code paths."""

from __future__ import annotations

DEFAULT_STEP_BUDGET = 10**8
DEFAULT_CELL_BUDGET = 10**7


class BudgetExceededError(Exception):
    """A guarded call would do more work than its configured budget allows."""

    def __init__(self, what: str, projected: int, budget: int):
        super().__init__(f"{what}: projected {projected} exceeds budget {budget}")
        self.what = what
        self.projected = projected
        self.budget = budget


def check_budget(projected: int, budget: int, what: str) -> None:
    if projected > budget:
        raise BudgetExceededError(what, projected, budget)
