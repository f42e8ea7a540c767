"""Exceptions raised by the nc function library."""

from typing import Optional


class NcError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(NcError, ValueError):
    """Objects of different dimension d, level n or shape were combined."""


class ExpressionSyntaxError(NcError, ValueError):
    """A polynomial expression does not conform to the grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class VariableIndexError(ExpressionSyntaxError):
    """A variable index lies outside z1..zd."""


class NegativeExponentError(ExpressionSyntaxError):
    """An exponent is negative."""


class IllConditionedError(NcError, ArithmeticError):
    """A linear solve is numerically singular."""

    def __init__(self, message: str, condition: float):
        self.condition = condition
        super().__init__(f"{message} (condition estimate {condition:.3e})")


class ValidationError(NcError, ValueError):
    """An object violates the invariants of its type."""


class BudgetExceededError(NcError, RuntimeError):
    """A word enumeration would exceed its configured budget."""


class OutsideBallError(NcError, ValueError):
    """A point that must lie inside an operator ball does not."""


class ProbeError(NcError, RuntimeError):
    """A randomized probe could not produce a usable sample."""


class ShorthandError(NcError, ValueError):
    """A command-line shorthand (ball, target, path) is not recognised."""
