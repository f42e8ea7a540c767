"""Uniform evaluation of the nc functions the library can represent."""

from typing import Protocol, Union, runtime_checkable

import numpy as np

from core.algebra.polynomial import FreePolynomial
from core.errors import DimensionMismatchError
from core.matrix.matrix_tuple import MatrixTuple, eval_poly


@runtime_checkable
class NcFunction(Protocol):
    """Anything graded on matrix tuples with an ``evaluate`` method."""

    @property
    def d(self) -> int: ...

    def evaluate(self, X: MatrixTuple) -> np.ndarray: ...


EvaluableNcFunction = Union[FreePolynomial, NcFunction]


def evaluate(f: EvaluableNcFunction, X: MatrixTuple) -> np.ndarray:
    if isinstance(f, FreePolynomial):
        return eval_poly(f, X)
    if f.d != X.d:
        raise DimensionMismatchError(f"Function has dimension {f.d}, point has {X.d}")
    return f.evaluate(X)


def evaluate_scalar(f: EvaluableNcFunction, X: MatrixTuple) -> complex:
    """f at a level-one point, as a scalar."""
    value = evaluate(f, X)
    if value.shape != (1, 1):
        raise DimensionMismatchError(f"Expected a 1 x 1 value, got shape {value.shape}")
    return complex(value[0, 0])


def ball_pencil_of(f: EvaluableNcFunction):
    """The pencil a realization-backed function lives over, or None."""
    realization = getattr(f, "realization", f)
    return getattr(realization, "pencil", None)
