"""Exception hierarchy.

Every failure carries a human readable ``detail`` and the process exit code the
command line maps it to: 1 for a failed mathematical predicate, 2 for bad input.
"""
from typing import Optional


class WildcoverError(Exception):
    """Base error."""

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class MathematicalFailure(WildcoverError):
    """A property of the instance does not hold."""

    exit_code = 1


class ValidationFailure(WildcoverError):
    """The input is malformed or outside the supported range."""

    exit_code = 2


# Mathematical failures

class NotStable(MathematicalFailure):
    """A translation does not lift to the cover."""

    def __init__(self, index: int, detail: Optional[str] = None):
        super().__init__(detail or f"translation does not stabilize the class of f{index}")
        self.index = index


class RepresentationLawViolated(MathematicalFailure):
    pass


class NotProportional(MathematicalFailure):
    pass


class SupportViolation(MathematicalFailure):
    pass


class DependentGammas(MathematicalFailure):
    pass


class DependentClasses(MathematicalFailure):
    pass


class DependentBasis(MathematicalFailure):
    pass


class NoRoot(MathematicalFailure):
    pass


class NotMaxJumps(MathematicalFailure):
    pass


class OrderBoundExceeded(MathematicalFailure):
    pass


class DivisibilityViolation(MathematicalFailure):
    pass


# Validation failures

class InvalidField(ValidationFailure):
    pass


class DivisionByZero(ValidationFailure):
    pass


class FieldMismatch(ValidationFailure):
    pass


class NoEmbedding(ValidationFailure):
    pass


class NotAdditive(ValidationFailure):
    pass


class WrongShape(ValidationFailure):
    pass


class ZeroPolynomial(ValidationFailure):
    pass


class BadIndex(ValidationFailure):
    pass


class OutOfRange(ValidationFailure):
    pass


class Mismatch(ValidationFailure):
    pass


class NotSeparable(ValidationFailure):
    pass


class ParameterConstraintViolated(ValidationFailure):
    pass


class BoundExceeded(ValidationFailure):
    pass


class ParseError(ValidationFailure):
    """Malformed spec or polynomial text."""

    def __init__(self, detail: str, line: int = 1, column: int = 1):
        super().__init__(detail)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.detail}"
