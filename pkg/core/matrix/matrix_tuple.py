"""Points of the nc universe and the nc structural operations on them."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from configs.configs import Configs
from core.algebra.polynomial import FreePolynomial
from core.algebra.word import Word, words
from core.errors import BudgetExceededError, DimensionMismatchError, IllConditionedError, ValidationError
from core.matrix.linalg import as_complex_matrix, condition_number, op_norm

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MatrixTuple:
    """X = (X_1, ..., X_d), d complex n x n matrices at level n."""

    matrices: tuple[np.ndarray, ...]

    def __post_init__(self):
        if not self.matrices:
            raise ValidationError("A matrix tuple needs at least one matrix")
        frozen = tuple(as_complex_matrix(m) for m in self.matrices)
        n = frozen[0].shape[0]
        if n < 1:
            raise ValidationError("A matrix tuple needs level n >= 1")
        for j, matrix in enumerate(frozen, start=1):
            if matrix.shape != (n, n):
                raise DimensionMismatchError(f"X_{j} has shape {matrix.shape}, expected ({n}, {n})")
        object.__setattr__(self, "matrices", frozen)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def d(self) -> int:
        return len(self.matrices)

    def __getitem__(self, j: int) -> np.ndarray:
        """X_j with 1-based j."""
        if not 1 <= j <= self.d:
            raise IndexError(f"Coordinate {j} outside 1..{self.d}")
        return self.matrices[j - 1]

    def __iter__(self):
        return iter(self.matrices)

    def scaled(self, t: complex) -> "MatrixTuple":
        return MatrixTuple(tuple(t * m for m in self.matrices))

    def is_scalar(self) -> bool:
        return self.n == 1

    def scalars(self) -> tuple[complex, ...]:
        if self.n != 1:
            raise DimensionMismatchError(f"Point has level {self.n}, not a scalar point")
        return tuple(complex(m[0, 0]) for m in self.matrices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixTuple):
            return NotImplemented
        return (
            self.d == other.d
            and self.n == other.n
            and all(np.array_equal(a, b) for a, b in zip(self.matrices, other.matrices))
        )

    def __hash__(self) -> int:
        return hash(tuple(m.tobytes() for m in self.matrices))

    def __repr__(self) -> str:
        return f"MatrixTuple(n={self.n}, d={self.d})"


def from_scalars(values: Sequence[complex]) -> MatrixTuple:
    """The scalar point (x_1, ..., x_d) at level 1."""
    return MatrixTuple(tuple(np.array([[complex(v)]]) for v in values))


def zeros(n: int, d: int) -> MatrixTuple:
    return MatrixTuple(tuple(np.zeros((n, n), dtype=complex) for _ in range(d)))


def _check_dims(X: MatrixTuple, d: int, what: str = "point") -> None:
    if X.d != d:
        raise DimensionMismatchError(f"{what} has dimension {X.d}, expected {d}")


def sup_norm(X: MatrixTuple) -> float:
    """||X||_inf = max_j ||X_j||."""
    return max(op_norm(m) for m in X.matrices)


def eval_word(X: MatrixTuple, w: Word) -> np.ndarray:
    """X^w = X_{w_1} ... X_{w_k}; the unit word gives I_n."""
    _check_dims(X, w.d)
    result = np.eye(X.n, dtype=complex)
    for letter in w.letters:
        result = result @ X[letter]
    return result


def eval_poly(P: FreePolynomial, X: MatrixTuple) -> np.ndarray:
    """P(X) = sum_w c_w X^w, sharing prefix products between words."""
    _check_dims(X, P.d)
    prefixes: dict[tuple[int, ...], np.ndarray] = {(): np.eye(X.n, dtype=complex)}

    def power(letters: tuple[int, ...]) -> np.ndarray:
        if letters not in prefixes:
            prefixes[letters] = power(letters[:-1]) @ X[letters[-1]]
        return prefixes[letters]

    result = np.zeros((X.n, X.n), dtype=complex)
    for word, c in P.terms.items():
        result = result + c * power(word.letters)
    return result


def direct_sum(X: MatrixTuple, Y: MatrixTuple) -> MatrixTuple:
    """X (+) Y with block-diagonal entries at level n + m."""
    _check_dims(Y, X.d, "second summand")
    return MatrixTuple(tuple(scipy.linalg.block_diag(a, b) for a, b in zip(X.matrices, Y.matrices)))


def similarity(S: np.ndarray, X: MatrixTuple, cond_limit: Optional[float] = None) -> MatrixTuple:
    """S . X = (S^{-1} X_1 S, ..., S^{-1} X_d S)."""
    S = as_complex_matrix(S)
    if S.shape != (X.n, X.n):
        raise DimensionMismatchError(f"Similarity of shape {S.shape} at level {X.n}")
    limit = Configs().COND_LIMIT if cond_limit is None else cond_limit
    condition = condition_number(S)
    if not np.isfinite(condition) or condition > limit:
        raise IllConditionedError("Similarity matrix is numerically singular", condition)
    lu = scipy.linalg.lu_factor(S)
    return MatrixTuple(tuple(scipy.linalg.lu_solve(lu, m @ S) for m in X.matrices))


def ampliation(X: MatrixTuple, m: int) -> MatrixTuple:
    """X^{(m)} = X (+) ... (+) X, m copies."""
    if m < 1:
        raise ValidationError(f"Ampliation factor must be positive, got {m}")
    eye = np.eye(m, dtype=complex)
    return MatrixTuple(tuple(np.kron(eye, x) for x in X.matrices))


def is_nilpotent(X: MatrixTuple, k: int, tol: Optional[float] = None) -> bool:
    """True iff ||X^w|| <= tol for every word of size exactly k."""
    if k < 1:
        raise ValidationError(f"Nilpotency order must be positive, got {k}")
    tol = Configs().NORM_TOL if tol is None else tol
    budget = Configs().NILPOTENT_WORD_BUDGET
    if X.d**k > budget:
        raise BudgetExceededError(f"{X.d}^{k} words exceed the enumeration budget {budget}")

    def search(prefix: np.ndarray, depth: int) -> bool:
        if depth == k:
            return op_norm(prefix) <= tol
        return all(search(prefix @ x, depth + 1) for x in X.matrices)

    return search(np.eye(X.n, dtype=complex), 0)


def block_upper_triangular(X: MatrixTuple, H: MatrixTuple, Y: MatrixTuple) -> MatrixTuple:
    """The level-2n tuple [[X_j, H_j], [0, Y_j]] for X, H, Y at level n."""
    _check_dims(H, X.d, "direction")
    _check_dims(Y, X.d, "second base point")
    blocks = []
    for x, h, y in zip(X.matrices, H.matrices, Y.matrices):
        blocks.append(np.block([[x, h], [np.zeros((y.shape[0], x.shape[1]), dtype=complex), y]]))
    return MatrixTuple(tuple(blocks))


def upper_right_block(matrix: np.ndarray, n: int) -> np.ndarray:
    """The (1,2) block of a 2 x 2 block matrix with n x n leading block."""
    return matrix[:n, n:]


def row_stack_words(X: MatrixTuple, N: int) -> np.ndarray:
    """row(X^w)_{|w|=N} in length-lex order, an n x (d^N n) matrix."""
    return np.hstack([eval_word(X, w) for w in words(X.d, N)])


def tuple_distance(X: MatrixTuple, Y: MatrixTuple) -> float:
    """sup_norm(X - Y) for points at the same level."""
    _check_dims(Y, X.d, "second point")
    if X.n != Y.n:
        raise DimensionMismatchError(f"Points at levels {X.n} and {Y.n}")
    return sup_norm(MatrixTuple(tuple(a - b for a, b in zip(X.matrices, Y.matrices))))
