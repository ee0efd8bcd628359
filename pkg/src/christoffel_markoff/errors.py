"""Exception types shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed to hold.

    Raised only when something that must be true for valid inputs turns out
    false, which means a non-Christoffel word or a corrupted value got
    through the input checks.
    """
