"""Seeded lower-bound estimates of sup-norms over one level of an operator ball.

The evaluation schedule is prefix-stable: even slots hold random multistart
samples (per-sample seed = seed + index, margins cycling through
PROBE_MARGINS), odd slots hold coordinate hill-climbing trials from the
current best point. A larger budget only extends the schedule, so the best
value never decreases with the budget.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from configs.configs import Configs
from constants.numerics import HILL_INITIAL_STEP, HILL_STEP_FLOOR, INTERIOR_MARGIN, PROBE_MARGINS
from core.ball.ball import Inside, OperatorBall, boundary_distance, membership
from core.errors import NcError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple
from core.ncdiff.evaluable import EvaluableNcFunction, evaluate
from core.probe.sampling import sample_in_ball

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProbeReport:
    """Best sampled value of ||f(X)||; a lower bound for the sup, never the sup itself."""

    target: str
    level: int
    budget: int
    seed: int
    best_value: float
    argmax: Optional[MatrixTuple]
    trajectory: tuple[tuple[int, float], ...]
    evaluations: int
    distances: tuple[float, ...] = ()
    failures: int = 0
    ball: str = ""

    def same_as(self, other: "ProbeReport") -> bool:
        """Bit-for-bit equality of two reports."""
        return (
            self.target == other.target
            and self.level == other.level
            and self.budget == other.budget
            and self.seed == other.seed
            and self.best_value == other.best_value
            and self.trajectory == other.trajectory
            and self.distances == other.distances
            and self.evaluations == other.evaluations
            and self.failures == other.failures
            and self.argmax == other.argmax
        )


@dataclass
class _Search:
    f: EvaluableNcFunction
    ball: OperatorBall
    best_value: float = -1.0
    best_point: Optional[MatrixTuple] = None
    evaluations: int = 0
    failures: int = 0
    trajectory: list = field(default_factory=list)
    distances: list = field(default_factory=list)

    def value(self, X: MatrixTuple) -> Optional[float]:
        self.evaluations += 1
        try:
            return op_norm(evaluate(self.f, X))
        except NcError as error:
            self.failures += 1
            logger.debug("Evaluation failed at sample %d: %s", self.evaluations, error)
            return None

    def offer(self, X: MatrixTuple, value: Optional[float]) -> bool:
        if value is None or not value > self.best_value:
            return False
        self.best_value = value
        self.best_point = X
        self.trajectory.append((self.evaluations, value))
        self.distances.append(boundary_distance(self.ball, X))
        return True


class _HillClimber:
    """Coordinate-wise climbing over real and imaginary parts of every entry."""

    def __init__(self, ball: OperatorBall):
        self.ball = ball
        self.step = HILL_INITIAL_STEP
        self.position = 0
        self.improved = False

    def restart(self) -> None:
        self.step = HILL_INITIAL_STEP
        self.position = 0
        self.improved = False

    @property
    def active(self) -> bool:
        return self.step >= HILL_STEP_FLOOR

    def propose(self, X: MatrixTuple) -> MatrixTuple:
        n, d = X.n, X.d
        coordinates = 2 * d * n * n
        index, sign = divmod(self.position, 2)
        j, rest = divmod(index % coordinates, 2 * n * n)
        entry, part = divmod(rest, 2)
        row, col = divmod(entry, n)
        delta = (1 if sign == 0 else -1) * self.step * (1 if part == 0 else 1j)
        matrices = [m.copy() for m in X.matrices]
        matrices[j][row, col] += delta
        candidate = MatrixTuple(tuple(matrices))
        s = self.ball.norm_at(candidate)
        if s > 1 - INTERIOR_MARGIN:
            candidate = candidate.scaled((1 - INTERIOR_MARGIN) / s)
        return candidate

    def advance(self, X: MatrixTuple, accepted: bool) -> None:
        self.improved = self.improved or accepted
        self.position += 1
        if self.position == 2 * 2 * X.d * X.n * X.n:
            self.position = 0
            if not self.improved:
                self.step /= 2
            self.improved = False


def _draw(ball: OperatorBall, n: int, seed: int, index: int, margins: Sequence[float]) -> MatrixTuple:
    rng = np.random.default_rng(seed + index)
    return sample_in_ball(ball, n, margins[index % len(margins)], rng)


def estimate_sup(
    f: EvaluableNcFunction,
    ball: OperatorBall,
    n: int,
    budget: int,
    seed: int,
    target: str = "",
    injected: Sequence[MatrixTuple] = (),
    workers: Optional[int] = None,
    margins: Sequence[float] = PROBE_MARGINS,
) -> ProbeReport:
    """Multistart plus hill climbing estimate of sup ||f(X)|| over D_Q(n).

    ``injected`` points are evaluated before the schedule when they lie
    inside the ball; they do not count against the budget.
    """
    if budget < 1:
        raise ValidationError(f"Budget must be at least 1, got {budget}")
    if not margins:
        raise ValidationError("Need at least one sampling margin")
    workers = Configs().PROBE_WORKERS if workers is None else workers
    sample_count = (budget + 1) // 2
    logger.info("Probing %s on %s level %d: budget %d, seed %d", target or "f", ball, n, budget, seed)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        samples = list(pool.map(lambda i: _draw(ball, n, seed, i, margins), range(sample_count)))

    search = _Search(f, ball)
    for X in injected:
        if isinstance(membership(ball, X), Inside):
            search.offer(X, search.value(X))
        else:
            logger.debug("Skipping injected point outside %s", ball)
    climber = _HillClimber(ball)
    for slot in range(budget):
        if slot % 2 == 0:
            X = samples[slot // 2]
            if search.offer(X, search.value(X)):
                climber.restart()
        elif search.best_point is not None and climber.active:
            candidate = climber.propose(search.best_point)
            point = search.best_point
            accepted = search.offer(candidate, search.value(candidate))
            climber.advance(point, accepted)

    best = max(search.best_value, 0.0)
    logger.info("Best value %.6g after %d evaluations (%d failed)", best, search.evaluations, search.failures)
    return ProbeReport(
        target=target,
        level=n,
        budget=budget,
        seed=seed,
        best_value=best,
        argmax=search.best_point,
        trajectory=tuple(search.trajectory),
        evaluations=search.evaluations,
        distances=tuple(search.distances),
        failures=search.failures,
        ball=str(ball),
    )
