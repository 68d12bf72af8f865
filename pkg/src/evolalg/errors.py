"""Exception hierarchy shared by every module.

The CLI maps exception classes onto exit codes, so each class belongs to
exactly one of the groups below.
"""


class EvolalgError(Exception):
    """Base class for all library errors."""


# --- parse errors (CLI exit 2) ---

class ParseError(EvolalgError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# --- validation errors (CLI exit 3) ---

class ValidationError(EvolalgError):
    pass


class DivisionByZero(ValidationError, ZeroDivisionError):
    pass


class FieldMismatch(ValidationError):
    pass


class NotSquare(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class LabelCountMismatch(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class LoopEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class VertexOutOfRange(ValidationError):
    pass


class NotAMorphism(ValidationError):
    pass


class ZeroScale(ValidationError):
    pass


class NotAPermutation(ValidationError):
    pass


class InvalidGroup(ValidationError):
    """Multiplication table violates a group axiom."""


class NotGenerating(ValidationError):
    pass


class KindMismatch(ValidationError):
    """Two input files hold different kinds of objects."""


# --- algebra-specific refusals ---

class NotRegular(EvolalgError):
    """Structure matrix is singular; the operation is undefined or unsafe."""


class NotInImage(EvolalgError):
    """Algebra is not monomially equivalent to any graph algebra."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(f"{condition}: {detail}" if detail else condition)


class RealizationFailed(EvolalgError):
    pass


# --- size caps (CLI exit 7) ---

class CapExceeded(EvolalgError):
    pass


class GroupTooLarge(CapExceeded):
    pass


class ClosureTooLarge(CapExceeded):
    pass


class OrderTooLarge(CapExceeded):
    pass
