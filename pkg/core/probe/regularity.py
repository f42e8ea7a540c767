"""Sampled estimates of the two right-regularity factors of an order-N expansion.

    row factor:    sup ||row(X^w)_{|w|=N}||
    column factor: sup ||col(g_w(X))_{|w|=N}||

where g_w are the remainder factors of a realization, or the left-division
quotients of a polynomial without words shorter than N.
"""

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from configs.configs import Configs
from constants.numerics import NONCONVERGENCE_GROWTH
from core.algebra.polynomial import FreePolynomial, left_divide
from core.algebra.word import words
from core.ball.ball import OperatorBall
from core.errors import BudgetExceededError, DimensionMismatchError, ValidationError
from core.matrix.matrix_tuple import MatrixTuple, ampliation, eval_poly, row_stack_words
from core.probe.scans import builtin_path
from core.probe.search import ProbeReport, estimate_sup
from core.realization.realization import Realization, coefficient_row, resolvent_term

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WordRow:
    """X -> row(X^w)_{|w|=N}, an n x (d^N n) matrix."""

    d: int
    order: int

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        if X.d != self.d:
            raise DimensionMismatchError(f"Row stack has dimension {self.d}, point has {X.d}")
        return row_stack_words(X, self.order)


class RemainderColumn:
    """X -> col(g_w(X))_{|w|=N}, a (d^N n) x n matrix."""

    def __init__(self, f: Union[Realization, FreePolynomial], order: int):
        self.function = f
        self.order = order
        if isinstance(f, FreePolynomial):
            quotients = left_divide(f, order)
            self._quotients = [quotients[w] for w in words(f.d, order)]
            self._rows = None
        else:
            self._quotients = None
            self._rows = [coefficient_row(f, w) for w in words(f.d, order)]

    @property
    def d(self) -> int:
        return self.function.d

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        if self._quotients is not None:
            return np.vstack([eval_poly(q, X) for q in self._quotients])
        resolvent = resolvent_term(self.function, X)
        eye = np.eye(X.n, dtype=complex)
        return np.vstack([np.kron(row, eye) @ resolvent for row in self._rows])


@dataclass(frozen=True)
class RegularityReport:
    order: int
    row: ProbeReport
    column: ProbeReport
    column_half_budget: ProbeReport

    @property
    def row_factor(self) -> float:
        return self.row.best_value

    @property
    def column_factor(self) -> float:
        return self.column.best_value

    @property
    def nonconvergent(self) -> bool:
        """The column estimate still grows when the budget doubles."""
        previous = self.column_half_budget.best_value
        return self.column.best_value > NONCONVERGENCE_GROWTH * previous and self.column.best_value > 0


def _injected_points(d: int, n: int, budget: int) -> list[MatrixTuple]:
    """Ampliated points of the builtin boundary path, eps_k = 0.1 * 2^-k."""
    if d != 2:
        return []
    count = max(1, int(math.log2(budget))) if budget > 1 else 1
    return [ampliation(builtin_path(0.1 * 0.5**k), n) for k in range(count)]


def regularity_factors(
    f: Union[Realization, FreePolynomial],
    N: int,
    ball: OperatorBall,
    n: int,
    budget: int,
    seed: int,
) -> RegularityReport:
    """Estimate the row and column factors at level n over the ball.

    For d = 2 the column search also starts from the builtin boundary path,
    with more path points the larger the budget; a column estimate that keeps
    growing between budget/2 and budget is reported as nonconvergent.
    """
    if N < 1:
        raise ValidationError(f"Expansion order must be positive, got {N}")
    if f.d != ball.d:
        raise DimensionMismatchError(f"Function has dimension {f.d}, ball has {ball.d}")
    word_budget = Configs().REGULARITY_WORD_BUDGET
    if f.d**N > word_budget:
        raise BudgetExceededError(f"{f.d}^{N} stacked words exceed the budget {word_budget}")

    column = RemainderColumn(f, N)
    row_report = estimate_sup(WordRow(f.d, N), ball, n, budget, seed, target=f"row:{N}")
    column_report = estimate_sup(
        column, ball, n, budget, seed, target=f"column:{N}", injected=_injected_points(f.d, n, budget)
    )
    half = max(1, budget // 2)
    half_report = estimate_sup(
        column, ball, n, half, seed, target=f"column:{N}", injected=_injected_points(f.d, n, half)
    )
    report = RegularityReport(order=N, row=row_report, column=column_report, column_half_budget=half_report)
    logger.info(
        "Regularity order %d on %s: row %.6g, column %.6g, nonconvergent %s",
        N,
        ball,
        report.row_factor,
        report.column_factor,
        report.nonconvergent,
    )
    return report
