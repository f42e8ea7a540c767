"""Builtin realizations."""

import numpy as np

from core.ball.pencil import diagonal_pencil
from core.realization.realization import Realization, RealizationMode, make_realization

_HALF_SQRT2 = float(np.sqrt(0.5))


def example_5_2() -> Realization:
    """Bounded function on the nc bidisk whose resolvent term is unbounded.

    On scalar points f(x) = (2 x1 x2 - x1 - x2) / (x1 + x2 - 2); the 3 x 3
    system matrix is unitary.
    """
    return make_realization(
        pencil=diagonal_pencil(2),
        m=1,
        A=0,
        B=[_HALF_SQRT2, _HALF_SQRT2],
        C=[_HALF_SQRT2, _HALF_SQRT2],
        D=[[0.5, -0.5], [-0.5, 0.5]],
        mode=RealizationMode.ISOMETRY,
    )


def closed_form_5_2(x1: complex, x2: complex) -> complex:
    return (2 * x1 * x2 - x1 - x2) / (x1 + x2 - 2)


def closed_form_resolvent_5_2(x1: complex, x2: complex) -> np.ndarray:
    denominator = x1 + x2 - 2
    return np.sqrt(2) * np.array([[(x2 - 1) / denominator], [(x1 - 1) / denominator]])


def closed_form_delta_5_2(x1: complex, x2: complex) -> tuple[complex, complex]:
    """(Delta_1 f(0, x), Delta_2 f(0, x))."""
    denominator = x1 + x2 - 2
    return (x2 - 1) / denominator, (x1 - 1) / denominator


def constant_realization(value: complex, pencil=None) -> Realization:
    pencil = diagonal_pencil(2) if pencil is None else pencil
    return make_realization(
        pencil=pencil,
        m=1,
        A=value,
        B=np.zeros(pencil.p),
        C=np.zeros(pencil.q),
        D=np.zeros((pencil.q, pencil.p)),
    )
