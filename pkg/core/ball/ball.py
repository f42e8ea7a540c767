"""NC operator balls D_Q = {X : ||Q(X)|| < 1} and three-way membership."""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from configs.configs import Configs
from core.ball.pencil import Pencil, diagonal_pencil, pencil_eval, unit_column_pencil, unit_row_pencil
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inside:
    norm: float
    distance: float


@dataclass(frozen=True)
class Boundary:
    norm: float
    tol: float


@dataclass(frozen=True)
class Outside:
    norm: float
    excess: float


Membership = Union[Inside, Boundary, Outside]


@dataclass(frozen=True)
class OperatorBall:
    """The nc operator ball of a pencil; ``name`` is the shorthand it came from."""

    pencil: Pencil
    name: Optional[str] = None

    @property
    def d(self) -> int:
        return self.pencil.d

    def norm_at(self, X: MatrixTuple) -> float:
        """s = ||Q(X)||."""
        return op_norm(pencil_eval(self.pencil, X))

    def membership(self, X: MatrixTuple, tol: Optional[float] = None) -> Membership:
        return membership(self, X, tol)

    def contains(self, X: MatrixTuple, tol: Optional[float] = None) -> bool:
        return isinstance(membership(self, X, tol), Inside)

    def __str__(self) -> str:
        return self.name or f"pencil(d={self.d}, p={self.pencil.p}, q={self.pencil.q})"


def membership(ball: OperatorBall, X: MatrixTuple, tol: Optional[float] = None) -> Membership:
    """Inside(1 - s) if s < 1 - tol, Boundary if |s - 1| <= tol, else Outside(s - 1)."""
    tol = Configs().MEMBERSHIP_TOL if tol is None else tol
    s = ball.norm_at(X)
    if s < 1 - tol:
        return Inside(norm=s, distance=1 - s)
    if abs(s - 1) <= tol:
        return Boundary(norm=s, tol=tol)
    return Outside(norm=s, excess=s - 1)


def boundary_distance(ball: OperatorBall, X: MatrixTuple) -> float:
    """1 - ||Q(X)||; negative outside the ball."""
    return 1 - ball.norm_at(X)


def row_ball(d: int) -> OperatorBall:
    """Row contractions: ||[X_1 ... X_d]|| < 1."""
    return OperatorBall(unit_row_pencil(d), name=f"row:{d}")


def polydisk(d: int) -> OperatorBall:
    """Tuples of strict contractions: max_j ||X_j|| < 1."""
    return OperatorBall(diagonal_pencil(d), name=f"polydisk:{d}")


def column_ball(d: int) -> OperatorBall:
    """Column contractions: ||sum_j X_j^* X_j|| < 1."""
    return OperatorBall(unit_column_pencil(d), name=f"column:{d}")
