"""Matrix convexity of operator balls: compressions and the factor-two bound."""

import logging
from typing import Iterable, Optional

import numpy as np

from configs.configs import Configs
from core.ball.ball import Inside, OperatorBall, membership
from core.errors import OutsideBallError, ValidationError
from core.matrix.linalg import isometry_defect
from core.matrix.matrix_tuple import MatrixTuple, from_scalars, sup_norm

logger = logging.getLogger(__name__)


def state_compression(X: MatrixTuple, v: np.ndarray, tol: Optional[float] = None) -> MatrixTuple:
    """(<X_1 v, v>, ..., <X_d v, v>) as a scalar point."""
    tol = Configs().UNIT_VECTOR_TOL if tol is None else tol
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.shape[0] != X.n:
        raise ValidationError(f"Vector of length {v.shape[0]} at level {X.n}")
    if abs(np.linalg.norm(v) - 1) > tol:
        raise ValidationError(f"State vector is not a unit vector (norm {np.linalg.norm(v):.3e})")
    return from_scalars([np.vdot(v, x @ v) for x in X.matrices])


def ucp_compression(X: MatrixTuple, V: np.ndarray, tol: Optional[float] = None) -> MatrixTuple:
    """(V* X_1 V, ..., V* X_d V) for an isometry V: C^k -> C^n."""
    tol = Configs().NORM_TOL if tol is None else tol
    V = np.asarray(V, dtype=complex)
    if V.ndim == 1:
        V = V.reshape(-1, 1)
    if V.shape[0] != X.n:
        raise ValidationError(f"Isometry with {V.shape[0]} rows at level {X.n}")
    defect = isometry_defect(V)
    if defect > tol:
        raise ValidationError(f"V is not an isometry (||V*V - I|| = {defect:.3e})")
    adjoint = V.conj().T
    return MatrixTuple(tuple(adjoint @ x @ V for x in X.matrices))


def factor_two_check(ball: OperatorBall, samples: Iterable[MatrixTuple], r: float) -> bool:
    """Check that D_Q(1) in r D^d forces ||X||_inf < 2r on every sample.

    Scalar samples must respect the level-one bound r; every sample must lie
    in the ball.
    """
    if r <= 0:
        raise ValidationError(f"Level-one bound must be positive, got {r}")
    holds = True
    for index, X in enumerate(samples):
        status = membership(ball, X)
        if not isinstance(status, Inside):
            raise OutsideBallError(f"Sample {index} is not in {ball}: {status}")
        if X.is_scalar() and max(abs(x) for x in X.scalars()) > r:
            raise ValidationError(f"Scalar sample {index} exceeds the level-one bound r = {r}")
        if not sup_norm(X) < 2 * r:
            logger.info("Sample %d at level %d violates ||X|| < 2r", index, X.n)
            holds = False
    return holds
