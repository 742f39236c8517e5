"""Enumeration budget guard.

Every operation that enumerates combinatorial objects (codewords, subsets,
subspaces, ...) takes a ``budget`` keyword giving the maximum number of
objects it may visit.  If the exact count required exceeds the budget the
operation raises instead of truncating, so results are never silently partial.
"""
from __future__ import annotations

DEFAULT_BUDGET = 10**6


class BudgetExceededError(ValueError):
    """An enumeration would visit more objects than the allowed budget."""

    def __init__(self, required: int, budget: int, what: str):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"enumerating {what} requires {required} objects, "
            f"exceeding the budget of {budget}"
        )


def check_budget(required: int, budget: int, what: str) -> None:
    if required > budget:
        raise BudgetExceededError(required, budget, what)
