"""Dense linear algebra helpers shared by the nc modules."""

import logging
from typing import Optional

import numpy as np
import scipy.linalg

from configs.configs import Configs
from core.errors import DimensionMismatchError, IllConditionedError

logger = logging.getLogger(__name__)


def op_norm(matrix: np.ndarray) -> float:
    """Operator norm (largest singular value); 0 for empty matrices."""
    if matrix.size == 0:
        return 0.0
    return float(scipy.linalg.svdvals(matrix)[0])


def condition_number(matrix: np.ndarray) -> float:
    singular = scipy.linalg.svdvals(matrix)
    if singular[-1] == 0:
        return float("inf")
    return float(singular[0] / singular[-1])


def checked_solve(
    matrix: np.ndarray,
    rhs: np.ndarray,
    what: str = "linear system",
    cond_limit: Optional[float] = None,
) -> np.ndarray:
    """Solve matrix @ x = rhs by pivoted LU, refusing ill-conditioned systems."""
    limit = Configs().COND_LIMIT if cond_limit is None else cond_limit
    condition = condition_number(matrix)
    if not np.isfinite(condition) or condition > limit:
        raise IllConditionedError(f"{what} is numerically singular", condition)
    logger.debug("Solving %s of size %d, condition %.3e", what, matrix.shape[0], condition)
    lu, piv = scipy.linalg.lu_factor(matrix)
    return scipy.linalg.lu_solve((lu, piv), rhs)


def isometry_defect(V: np.ndarray) -> float:
    """||V* V - I|| for a k-column matrix V."""
    k = V.shape[1]
    return op_norm(V.conj().T @ V - np.eye(k))


def as_complex_matrix(data, rows: Optional[int] = None, cols: Optional[int] = None) -> np.ndarray:
    """Copy into a read-only complex 2-d array, optionally checking its shape."""
    matrix = np.array(data, dtype=complex)
    if matrix.ndim == 1 and rows is not None and cols is not None and matrix.size == rows * cols:
        matrix = matrix.reshape(rows, cols)
    if matrix.ndim != 2:
        raise DimensionMismatchError(f"Expected a 2-d matrix, got shape {matrix.shape}")
    if rows is not None and matrix.shape[0] != rows or cols is not None and matrix.shape[1] != cols:
        raise DimensionMismatchError(f"Expected shape ({rows}, {cols}), got {matrix.shape}")
    matrix.setflags(write=False)
    return matrix
