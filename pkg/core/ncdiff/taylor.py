"""Taylor-Taylor expansion checks around the origin.

    f(X) = sum_{|v|<N} c_v X^v + sum_{|w|=N} X^w g_w(X)
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from configs.configs import Configs
from core.algebra.polynomial import FreePolynomial, homogeneous_component, left_divide, poly_sum
from core.algebra.word import words
from core.ball.ball import Inside, OperatorBall, membership
from core.errors import BudgetExceededError, OutsideBallError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple, eval_poly, eval_word
from core.realization.realization import Realization, power_series_coefficients, remainder_factor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TTReport:
    order: int
    lhs: np.ndarray
    rhs: np.ndarray
    defect: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.defect <= self.tol


def _polynomial_sides(P: FreePolynomial, X: MatrixTuple, N: int) -> tuple[np.ndarray, np.ndarray]:
    low = poly_sum((homogeneous_component(P, k) for k in range(N)), P.d)
    high = P - low
    rhs = eval_poly(low, X)
    if not high.is_zero():
        for w, quotient in left_divide(high, N).items():
            if not quotient.is_zero():
                rhs = rhs + eval_word(X, w) @ eval_poly(quotient, X)
    return eval_poly(P, X), rhs


def _realization_sides(f: Realization, X: MatrixTuple, N: int) -> tuple[np.ndarray, np.ndarray]:
    status = membership(OperatorBall(f.pencil), X)
    if not isinstance(status, Inside):
        raise OutsideBallError(f"TT expansion needs ||Q(X)|| < 1, got {status}")
    rhs = np.zeros((X.n, X.n), dtype=complex)
    for v, c in power_series_coefficients(f, N - 1).items():
        rhs = rhs + c * eval_word(X, v)
    for w in words(f.d, N):
        rhs = rhs + eval_word(X, w) @ remainder_factor(f, w).evaluate(X)
    return f.evaluate(X), rhs


def tt_check(
    f: Union[Realization, FreePolynomial],
    X: MatrixTuple,
    N: int,
    tol: Optional[float] = None,
) -> TTReport:
    """Compare f(X) with its order-N TT expansion built from coefficients and remainders."""
    if N < 1:
        raise ValidationError(f"Expansion order must be positive, got {N}")
    tol = Configs().MEMBERSHIP_TOL if tol is None else tol
    budget = Configs().TT_WORD_BUDGET
    if f.d**N > budget:
        raise BudgetExceededError(f"{f.d}^{N} remainder words exceed the budget {budget}")
    if isinstance(f, FreePolynomial):
        lhs, rhs = _polynomial_sides(f, X, N)
    else:
        lhs, rhs = _realization_sides(f, X, N)
    defect = op_norm(lhs - rhs)
    logger.debug("TT order %d at level %d: defect %.3e", N, X.n, defect)
    return TTReport(order=N, lhs=lhs, rhs=rhs, defect=defect, tol=tol)
