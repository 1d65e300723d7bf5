"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the validity range of a type or operation."""


class DegenerateBranchError(ArithmeticError):
    """The selected measurement branch has (numerically) zero probability."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed, indicating a bug rather than bad input."""
