"""Exception types shared by all modules."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class PrecisionError(RuntimeError):
    """Requested accuracy cannot be met: inadequate grid, truncated
    window, or an iteration that failed to converge."""
