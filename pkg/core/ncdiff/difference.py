"""First-order nc difference-differential calculus by block evaluation.

For an nc function f and X = [[0, h], [0, x]] one has

    f(X) = [[f(0), Delta f(0, x)[h]], [0, f(x)]],

so first differences are read off the (1,2) block.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from constants.numerics import COINCIDENCE_TOL
from core.ball.ball import Inside, OperatorBall, membership
from core.errors import DimensionMismatchError, OutsideBallError, ValidationError
from core.matrix.matrix_tuple import (
    MatrixTuple,
    block_upper_triangular,
    from_scalars,
    upper_right_block,
    zeros,
)
from core.ncdiff.evaluable import EvaluableNcFunction, ball_pencil_of, evaluate, evaluate_scalar

logger = logging.getLogger(__name__)


def _require_inside(f: EvaluableNcFunction, X: MatrixTuple) -> None:
    pencil = ball_pencil_of(f)
    if pencil is None:
        return
    status = membership(OperatorBall(pencil), X)
    if not isinstance(status, Inside):
        raise OutsideBallError(f"Base point is not strictly inside the ball ({status}); resolvent not guaranteed")


def _dimension(f: EvaluableNcFunction) -> int:
    return f.d


def delta_first(f: EvaluableNcFunction, x: Sequence[complex], h: Sequence[complex]) -> complex:
    """Delta f(0, x)[h] for a scalar base point x and direction h."""
    d = _dimension(f)
    if len(x) != d or len(h) != d:
        raise DimensionMismatchError(f"Base point and direction must have {d} entries")
    base = from_scalars(x)
    _require_inside(f, base)
    block = block_upper_triangular(zeros(1, d), from_scalars(h), base)
    return complex(upper_right_block(evaluate(f, block), 1)[0, 0])


@dataclass(frozen=True)
class DeltaFirstFunction:
    """X -> Delta_j f(0, X), read off f at [[0, e_j (x) I_n], [0, X]].

    For a realization this coincides with the remainder factor of the word j.
    """

    function: EvaluableNcFunction
    j: int

    def __post_init__(self):
        if not 1 <= self.j <= self.d:
            raise ValidationError(f"Direction index {self.j} outside 1..{self.d}")

    @property
    def d(self) -> int:
        return _dimension(self.function)

    @property
    def realization(self):
        return getattr(self.function, "realization", self.function)

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        n = X.n
        direction = MatrixTuple(
            tuple(np.eye(n, dtype=complex) if k == self.j else np.zeros((n, n), dtype=complex) for k in range(1, self.d + 1))
        )
        block = block_upper_triangular(zeros(n, self.d), direction, X)
        return upper_right_block(evaluate(self.function, block), n)


def d1_difference_quotient(f: EvaluableNcFunction, x: complex, y: complex) -> complex:
    """Delta f(x, y) = (f(x) - f(y)) / (x - y) for d = 1.

    Near-coincident points use the (1,2) entry of f([[x, 1], [0, y]]).
    """
    if _dimension(f) != 1:
        raise DimensionMismatchError(f"The scalar difference quotient needs d = 1, got {_dimension(f)}")
    if abs(x - y) > COINCIDENCE_TOL:
        return (evaluate_scalar(f, from_scalars([x])) - evaluate_scalar(f, from_scalars([y]))) / (x - y)
    return _block_quotient(f, [x], [y], [1])


def _block_quotient(
    f: EvaluableNcFunction, x: Sequence[complex], y: Sequence[complex], h: Sequence[complex]
) -> complex:
    block = block_upper_triangular(from_scalars(x), from_scalars(h), from_scalars(y))
    return complex(upper_right_block(evaluate(f, block), 1)[0, 0])


def gleason_split(f: EvaluableNcFunction, x: Sequence[complex]) -> tuple[complex, complex]:
    """(g_1(x), g_2(x)) with f(x) = f(0) + g_1(x) x_1 + g_2(x) x_2 on the bidisk.

    g_1(x) = (f(x_1, 0) - f(0, 0)) / x_1 and g_2(x) = (f(x_1, x_2) - f(x_1, 0)) / x_2;
    coordinates below the coincidence tolerance use the block derivative.
    """
    if _dimension(f) != 2 or len(x) != 2:
        raise DimensionMismatchError("The Gleason split is defined on the bidisk (d = 2)")
    x1, x2 = complex(x[0]), complex(x[1])
    if abs(x1) >= 1 or abs(x2) >= 1:
        raise OutsideBallError(f"Point ({x1}, {x2}) is not in the open bidisk")

    def value(a: complex, b: complex) -> complex:
        return evaluate_scalar(f, from_scalars([a, b]))

    if abs(x1) > COINCIDENCE_TOL:
        g1 = (value(x1, 0) - value(0, 0)) / x1
    else:
        g1 = _block_quotient(f, [x1, 0], [0, 0], [1, 0])
    if abs(x2) > COINCIDENCE_TOL:
        g2 = (value(x1, x2) - value(x1, 0)) / x2
    else:
        g2 = _block_quotient(f, [x1, x2], [x1, 0], [0, 1])
    return g1, g2
