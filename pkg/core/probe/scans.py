"""Boundary-approach blowup scans and the interior/boundary dichotomy scan."""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from constants.numerics import DICHOTOMY_GAP, PROBE_MARGINS
from core.ball.ball import Inside, OperatorBall, membership
from core.ball.pencil import Pencil, pencil_eval
from core.errors import DimensionMismatchError, OutsideBallError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple, from_scalars
from core.ncdiff.evaluable import EvaluableNcFunction, evaluate
from core.probe.sampling import PointSampler, sample_in_ball

logger = logging.getLogger(__name__)

Path = Callable[[float], MatrixTuple]


def builtin_path(epsilon: float) -> MatrixTuple:
    """x(eps) = (1 - eps^2 + i eps, 1 - eps^2 - i eps); |x_j|^2 = 1 - eps^2 + eps^4."""
    return from_scalars([1 - epsilon**2 + 1j * epsilon, 1 - epsilon**2 - 1j * epsilon])


@dataclass(frozen=True)
class BlowupRow:
    epsilon: float
    value: complex
    norm: float
    boundary_distance: float


@dataclass(frozen=True)
class BlowupTable:
    rows: tuple[BlowupRow, ...]

    @property
    def monotone_growth(self) -> bool:
        """Norms strictly increase as the path approaches the boundary."""
        ordered = sorted(self.rows, key=lambda row: row.boundary_distance, reverse=True)
        return len(ordered) > 1 and all(a.norm < b.norm for a, b in zip(ordered, ordered[1:]))


def blowup_scan(
    g: EvaluableNcFunction,
    path: Path,
    eps_list: Sequence[float],
    ball: OperatorBall,
) -> BlowupTable:
    """Evaluate g along path(eps), checking that every point is inside the ball."""
    rows = []
    for epsilon in eps_list:
        X = path(epsilon)
        status = membership(ball, X)
        if not isinstance(status, Inside):
            raise OutsideBallError(f"Path point at eps={epsilon} is not inside {ball}: {status}")
        value = evaluate(g, X)
        leading = complex(value[0, 0]) if value.size else 0j
        rows.append(BlowupRow(epsilon=float(epsilon), value=leading, norm=op_norm(value), boundary_distance=status.distance))
    table = BlowupTable(tuple(rows))
    logger.info("Blowup scan over %d points, monotone growth: %s", len(rows), table.monotone_growth)
    return table


@dataclass(frozen=True)
class AllInterior:
    max_norm: float
    norms: tuple[float, ...] = ()


@dataclass(frozen=True)
class AllBoundary:
    min_norm: float
    norms: tuple[float, ...] = ()


@dataclass(frozen=True)
class Mixed:
    """Numerical evidence against the hypotheses; never a refutation."""

    interior: tuple[tuple[int, float], ...]
    boundary: tuple[tuple[int, float], ...]
    norms: tuple[float, ...] = ()


DichotomyResult = Union[AllInterior, AllBoundary, Mixed]


def dichotomy_scan(
    F: Sequence[EvaluableNcFunction],
    source: OperatorBall,
    target: Pencil,
    samples: int,
    seed: int,
    n: int = 1,
    sampler: Optional[PointSampler] = None,
) -> DichotomyResult:
    """Classify s_i = ||P(F(X_i))|| over sampled X_i in the source ball."""
    if len(F) != target.d:
        raise DimensionMismatchError(f"Map has {len(F)} components, target pencil has d = {target.d}")
    if samples < 1:
        raise ValidationError(f"Need at least one sample, got {samples}")
    norms = []
    for index in range(samples):
        rng = np.random.default_rng(seed + index)
        if sampler is None:
            X = sample_in_ball(source, n, PROBE_MARGINS[index % len(PROBE_MARGINS)], rng)
        else:
            X = sampler(rng, n)
        image = MatrixTuple(tuple(evaluate(component, X) for component in F))
        norms.append(op_norm(pencil_eval(target, image)))
    threshold = 1 - DICHOTOMY_GAP
    if max(norms) < threshold:
        return AllInterior(max_norm=max(norms), norms=tuple(norms))
    if min(norms) > threshold:
        return AllBoundary(min_norm=min(norms), norms=tuple(norms))
    return Mixed(
        interior=tuple((i, s) for i, s in enumerate(norms) if s < threshold),
        boundary=tuple((i, s) for i, s in enumerate(norms) if s >= threshold),
        norms=tuple(norms),
    )
