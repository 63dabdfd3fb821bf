"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ArithmeticOverflow(DomainError, OverflowError):
    """A value or an exact intermediate does not fit in 64 bits."""


class NotInvertible(DomainError):
    pass


class NotCoprime(DomainError):
    pass


class ExpansionTooLarge(DomainError):
    pass


class UniverseTooLarge(DomainError):
    pass


class UnsupportedModulus(DomainError):
    pass


class InvariantViolation(AssertionError):
    """A runtime-checked identity failed. Always indicates a bug."""
