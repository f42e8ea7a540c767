"""Seeded random points in operator balls."""

import logging
from typing import Callable

import numpy as np

from configs.configs import Configs
from constants.numerics import MAX_DEGENERATE_DRAWS
from core.ball.ball import OperatorBall
from core.errors import ProbeError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple

logger = logging.getLogger(__name__)

PointSampler = Callable[[np.random.Generator, int], MatrixTuple]


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def sample_in_ball(ball: OperatorBall, n: int, margin: float, rng: np.random.Generator) -> MatrixTuple:
    """Gaussian draw rescaled so that ||Q(X)|| = 1 - margin."""
    if not 1 <= n <= Configs().MAX_LEVEL:
        raise ValidationError(f"Level must lie in 1..{Configs().MAX_LEVEL}, got {n}")
    if not 0 < margin < 1:
        raise ValidationError(f"Margin must lie in (0, 1), got {margin}")
    for attempt in range(MAX_DEGENERATE_DRAWS):
        X = MatrixTuple(tuple(complex_gaussian(rng, (n, n)) for _ in range(ball.d)))
        s = ball.norm_at(X)
        if s > 0:
            return X.scaled((1 - margin) / s)
        logger.debug("Degenerate draw %d at level %d, retrying", attempt, n)
    raise ProbeError(f"{MAX_DEGENERATE_DRAWS} consecutive degenerate draws in {ball}")


def random_isometry(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """An n x k isometry from the QR factorization of a Gaussian matrix."""
    if not 1 <= k <= n:
        raise ValidationError(f"An isometry C^{k} -> C^{n} needs 1 <= k <= n")
    q, r = np.linalg.qr(complex_gaussian(rng, (n, k)))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def random_invertible(n: int, rng: np.random.Generator, spread: float = 0.5) -> np.ndarray:
    """I + spread * G / ||G||, comfortably invertible for spread < 1."""
    G = complex_gaussian(rng, (n, n))
    return np.eye(n, dtype=complex) + spread * G / op_norm(G)


def random_contraction(n: int, rng: np.random.Generator, norm: float = 0.9) -> np.ndarray:
    """A Gaussian matrix rescaled to operator norm ``norm``."""
    G = complex_gaussian(rng, (n, n))
    return G * (norm / op_norm(G))


def uniform_disk(rng: np.random.Generator, size: int, radius: float = 1.0) -> np.ndarray:
    """``size`` points uniformly distributed in the disk |z| < radius."""
    r = radius * np.sqrt(rng.uniform(0, 1, size))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, size))
