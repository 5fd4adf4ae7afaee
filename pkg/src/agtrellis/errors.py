"""Exception types raised across the package."""

from __future__ import annotations


class AGTrellisError(Exception):
    """Base class for every error raised by this package."""


# finite fields
class NotPrime(AGTrellisError, ValueError):
    pass


class ReducibleModulus(AGTrellisError, ValueError):
    pass


class FieldTooLarge(AGTrellisError, ValueError):
    pass


class MixedFields(AGTrellisError, TypeError):
    pass


class DivisionByZero(AGTrellisError, ZeroDivisionError):
    pass


# linear algebra and codes
class IndexOutOfRange(AGTrellisError, IndexError):
    pass


class ShapeMismatch(AGTrellisError, ValueError):
    pass


class ZeroMatrix(AGTrellisError, ValueError):
    pass


class DegenerateDual(AGTrellisError, ValueError):
    """The dual of the full space is the zero code, which has no generator."""


class EnumerationTooLarge(AGTrellisError, ValueError):
    pass


class NotAPermutation(AGTrellisError, ValueError):
    pass


class BudgetZero(AGTrellisError, ValueError):
    pass


class ExhaustiveTooLarge(AGTrellisError, ValueError):
    pass


class ZeroWeightEntry(AGTrellisError, ValueError):
    pass


# gonality sequences
class GonalityError(AGTrellisError, ValueError):
    pass


class DegreeTooSmall(GonalityError):
    pass


class GenusTooSmall(GonalityError):
    pass


class NotIncreasing(GonalityError):
    pass


class BoundsViolated(GonalityError):
    pass


class SymmetryViolated(GonalityError):
    pass


class BelowDomain(GonalityError):
    pass


class OutOfDomain(GonalityError):
    pass


class OracleMismatch(AGTrellisError, AssertionError):
    """A closed form disagreed with the brute-force definition it shortcuts."""


# AG codes and bounds
class UnsupportedQ(AGTrellisError, ValueError):
    pass


class AbundantRegime(AGTrellisError, ValueError):
    pass


class HypothesisViolated(AGTrellisError, ValueError):
    pass


class ParseError(AGTrellisError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
