"""Exception types shared across the package."""


class SeshadriError(Exception):
    """Base class for all structured errors raised by this package."""


class ArityMismatchError(SeshadriError):
    """Operands live in polynomial rings with different numbers of variables."""


class FieldMismatchError(SeshadriError):
    """Operands have different coefficient fields."""


class ZeroPolynomialError(SeshadriError):
    """The zero polynomial was passed to an operation that needs a nonzero germ."""


class PointNotOnVarietyError(SeshadriError):
    """A base point does not lie on the variety it was paired with."""


class NotSquarefreeError(SeshadriError):
    """Input polynomial has a repeated factor."""


class DimensionError(SeshadriError):
    """A scheme does not have the dimension an operation requires."""


class LinePresentError(SeshadriError):
    """A line through the base point makes the requested bound inapplicable."""


class ParameterError(SeshadriError):
    """Parameters outside the documented range."""


class BudgetExceededError(SeshadriError):
    """A Groebner-driven computation ran past its step budget.

    Budgets are counted in reduction steps, so hitting the limit is
    deterministic for fixed inputs.
    """

    def __init__(self, message: str, steps: int):
        super().__init__(message)
        self.steps = steps


class ParseError(SeshadriError):
    """Syntax error in polynomial text, with 1-based position info."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
