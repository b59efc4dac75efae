"""Exception types shared across the package."""
from __future__ import annotations


class DomainError(ValueError):
    """Raised when inputs fall outside the domain an operation is defined on."""


class BudgetExceeded(RuntimeError):
    """Raised when a search or construction would exceed its configured budget.

    ``lower_bound`` carries the best bound established before giving up, when
    the operation has one.
    """

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound
