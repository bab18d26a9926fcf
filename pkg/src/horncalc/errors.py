"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Dimensions or grounds of the operands do not match."""


class DomainError(ValueError):
    """An argument violates a mathematical precondition."""


class BudgetError(RuntimeError):
    """An exhaustive search would exceed the configured resource budget."""
