"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad input: mismatched fields, reducible modulus, out-of-range degree."""


class CapacityError(RuntimeError):
    """The requested computation exceeds the size guardrail for its path."""


class ConsistencyError(ArithmeticError):
    """An exact-arithmetic identity failed; indicates a bug, never bad input."""
