"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured budget."""


class SizeGuardError(ValueError):
    """Input is too large for a brute-force oracle."""
