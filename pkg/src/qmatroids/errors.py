"""Exception types shared across the package."""


class BudgetExceeded(ValueError):
    """An enumeration would exceed the configured size budget."""

    def __init__(self, what: str, count: int, budget: int):
        super().__init__(f"{what}: {count} exceeds budget {budget}")
        self.what = what
        self.count = count
        self.budget = budget


class AxiomError(ValueError):
    """A rank function violates the (q-)matroid axioms."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
