"""Exception types shared across the package."""


class FpImmunityError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(FpImmunityError):
    pass


class NotCoprime(FpImmunityError):
    pass


class SearchLimit(FpImmunityError):
    pass


class ZeroElement(FpImmunityError):
    pass


class ArityMismatch(FpImmunityError):
    pass


class FieldMismatch(FpImmunityError):
    pass


class NotRootOfUnity(FpImmunityError):
    pass


class BadShape(FpImmunityError):
    pass


class BadRange(FpImmunityError):
    pass


class TooLarge(FpImmunityError):
    pass


class NotSquare(FpImmunityError):
    pass


class ConstantFunction(FpImmunityError):
    pass


class ZeroFunction(FpImmunityError):
    pass


class SearchBudgetExceeded(FpImmunityError):
    pass


class NotDivisor(FpImmunityError):
    pass


class CheckFailed(FpImmunityError):
    """A theorem-level assertion failed during a verification run."""
