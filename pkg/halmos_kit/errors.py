from typing import Optional


class HalmosError(Exception):
    """Base class of every error raised by halmos_kit."""

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.invariant = invariant


# numerics


class NonFiniteEntries(HalmosError, ValueError):
    pass


class NotHermitian(HalmosError, ValueError):
    pass


class NoConvergence(HalmosError, RuntimeError):
    pass


class NegativeEigenvalue(HalmosError, ValueError):
    pass


class SingularInput(HalmosError, ValueError):
    pass


class NotContained(HalmosError, ValueError):
    pass


class InvalidConfiguration(HalmosError, ValueError):
    pass


# canonical


class NotIdempotent(HalmosError, ValueError):
    pass


class SizeMismatch(HalmosError, ValueError):
    pass


class NotAPair(HalmosError, ValueError):
    pass


class ToleranceViolation(HalmosError, ArithmeticError):
    pass


class InvalidSpec(HalmosError, ValueError):
    pass


# algebra


class DecompositionMismatch(HalmosError, ValueError):
    pass


class SingularElement(HalmosError, ZeroDivisionError):
    pass


class WordSyntaxError(HalmosError, ValueError):
    """Raised by the word parser; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}", invariant="word syntax")
        self.column = column


# pairs


class NoIntertwiner(HalmosError, ValueError):
    pass


class InvalidParams(HalmosError, ValueError):
    pass


class Condition000Violated(HalmosError, ValueError):
    pass


class NotUnimodular(HalmosError, ValueError):
    pass


# cli


class MatrixFileError(HalmosError, ValueError):
    pass
