"""Linear pencils Q(Z) = sum_j Q_j Z_j with p x q coefficients."""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from core.errors import DimensionMismatchError, ValidationError
from core.matrix.linalg import as_complex_matrix
from core.matrix.matrix_tuple import MatrixTuple

logger = logging.getLogger(__name__)

INDEPENDENCE_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class Pencil:
    """Injective linear pencil; block (a, b) of Q(X) is sum_j (Q_j)_{ab} X_j."""

    coefficients: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValidationError("A pencil needs at least one coefficient")
        frozen = tuple(as_complex_matrix(c) for c in self.coefficients)
        shape = frozen[0].shape
        for j, c in enumerate(frozen, start=1):
            if c.shape != shape:
                raise DimensionMismatchError(f"Q_{j} has shape {c.shape}, expected {shape}")
        flattened = np.vstack([c.reshape(1, -1) for c in frozen])
        singular = scipy.linalg.svdvals(flattened)
        rank = int(np.sum(singular > INDEPENDENCE_RTOL * singular[0])) if singular[0] > 0 else 0
        if rank < len(frozen):
            raise ValidationError(
                f"Pencil coefficients are linearly dependent (rank {rank} < d = {len(frozen)})"
            )
        object.__setattr__(self, "coefficients", frozen)

    @property
    def d(self) -> int:
        return len(self.coefficients)

    @property
    def p(self) -> int:
        return self.coefficients[0].shape[0]

    @property
    def q(self) -> int:
        return self.coefficients[0].shape[1]

    def __getitem__(self, j: int) -> np.ndarray:
        """Q_j with 1-based j."""
        return self.coefficients[j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pencil):
            return NotImplemented
        return self.d == other.d and all(
            np.array_equal(a, b) for a, b in zip(self.coefficients, other.coefficients)
        )

    def __hash__(self) -> int:
        return hash(tuple(c.tobytes() for c in self.coefficients))


def pencil_eval(Q: Pencil, X: MatrixTuple) -> np.ndarray:
    """Q(X) = sum_j Q_j (x) X_j, a (pn) x (qn) matrix."""
    if X.d != Q.d:
        raise DimensionMismatchError(f"Pencil has dimension {Q.d}, point has {X.d}")
    result = np.zeros((Q.p * X.n, Q.q * X.n), dtype=complex)
    for coefficient, x in zip(Q.coefficients, X.matrices):
        result = result + np.kron(coefficient, x)
    return result


def unit_row_pencil(d: int) -> Pencil:
    """Q_j = j-th unit row (1 x d), so Q(Z) = [Z_1 ... Z_d]."""
    eye = np.eye(d, dtype=complex)
    return Pencil(tuple(eye[j : j + 1, :] for j in range(d)))


def unit_column_pencil(d: int) -> Pencil:
    """Q_j = j-th unit column (d x 1), so Q(Z) = col(Z_1, ..., Z_d)."""
    eye = np.eye(d, dtype=complex)
    return Pencil(tuple(eye[:, j : j + 1] for j in range(d)))


def diagonal_pencil(d: int) -> Pencil:
    """Q_j = E_jj, so Q(Z) = diag(Z_1, ..., Z_d)."""
    pencils = []
    for j in range(d):
        coefficient = np.zeros((d, d), dtype=complex)
        coefficient[j, j] = 1
        pencils.append(coefficient)
    return Pencil(tuple(pencils))


def pencil_from_matrices(matrices: Sequence) -> Pencil:
    return Pencil(tuple(np.asarray(m, dtype=complex) for m in matrices))
