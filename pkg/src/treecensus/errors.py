"""Exception types shared across the package.

All input-contract violations are ValueError subclasses so callers (and the
CLI) can treat them uniformly as usage errors; BudgetExceeded signals that a
requested computation is larger than the caller allowed, not that the input
is malformed.
"""


class NotMonotone(ValueError):
    """A degree sequence is not non-increasing (or has a nonpositive part)."""


class SumMismatch(ValueError):
    """Two degree sequences disagree in total, or the total is not a+b-1."""


class InvalidTree(ValueError):
    """Edge list does not describe a spanning tree of the stated K_{a,b}."""


class DimensionMismatch(ValueError):
    """A code's sequence lengths or entry ranges disagree with (a, b)."""


class DomainError(ValueError):
    """A bound was requested outside the range where it is claimed."""


class BudgetExceeded(RuntimeError):
    """The enumeration (or matrix) size exceeds the configured budget."""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} requires {required} but the budget is {budget}"
        )
