"""Fornasini-Marchesini realizations over linear pencils.

A realization with system matrix V = [[A, B], [C, D]] defines

    f(X) = A I_n + (B (x) I_n) L(X) [1 - (D (x) I_n) L(X)]^{-1} (C (x) I_n),

with L(X) = I_m (x) Q(X). The pencil may be rectangular (p x q): B has
length m p, C has length m q and D is (m q) x (m p).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from configs.configs import Configs
from core.algebra.polynomial import FreePolynomial
from core.algebra.word import Word, words
from core.ball.pencil import Pencil, pencil_eval
from core.errors import DimensionMismatchError, ValidationError
from core.matrix.linalg import checked_solve, isometry_defect, op_norm
from core.matrix.matrix_tuple import MatrixTuple

logger = logging.getLogger(__name__)


class RealizationMode(str, Enum):
    CONTRACTION = "contraction"
    ISOMETRY = "isometry"


@dataclass(frozen=True, eq=False)
class Realization:
    """Validated system data (A, B, C, D) over a pencil. Build with make_realization."""

    pencil: Pencil
    m: int
    A: complex
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    mode: RealizationMode = RealizationMode.CONTRACTION

    @property
    def d(self) -> int:
        return self.pencil.d

    @property
    def system_matrix(self) -> np.ndarray:
        """V = [[A, B], [C, D]]."""
        return np.block([[np.array([[self.A]]), self.B], [self.C, self.D]])

    def lifted_coefficient(self, j: int) -> np.ndarray:
        """L_j = I_m (x) Q_j, an (m p) x (m q) matrix."""
        return np.kron(np.eye(self.m, dtype=complex), self.pencil[j])

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        return evaluate(self, X)

    def coefficient(self, word: Word) -> complex:
        return power_series_coefficient(self, word)


def make_realization(
    pencil: Pencil,
    m: int,
    A: complex,
    B,
    C,
    D,
    mode: RealizationMode = RealizationMode.CONTRACTION,
    tol: Optional[float] = None,
) -> Realization:
    """Validate shapes, ||D|| <= 1 and, in isometry mode, V* V = I."""
    tol = Configs().NORM_TOL if tol is None else tol
    mode = RealizationMode(mode)
    if m < 1:
        raise ValidationError(f"State dimension m must be positive, got {m}")
    p, q = pencil.p, pencil.q
    B = np.array(B, dtype=complex).reshape(1, -1)
    C = np.array(C, dtype=complex).reshape(-1, 1)
    D = np.array(D, dtype=complex)
    if B.shape != (1, m * p):
        raise ValidationError(f"B must have length m*p = {m * p}, got {B.shape[1]}")
    if C.shape != (m * q, 1):
        raise ValidationError(f"C must have length m*q = {m * q}, got {C.shape[0]}")
    if D.shape != (m * q, m * p):
        raise ValidationError(f"D must have shape ({m * q}, {m * p}), got {D.shape}")
    D_norm = op_norm(D)
    if D_norm > 1 + tol:
        raise ValidationError(f"||D|| = {D_norm:.6g} exceeds 1")
    for array in (B, C, D):
        array.setflags(write=False)
    realization = Realization(pencil, m, complex(A), B, C, D, mode)
    if mode is RealizationMode.ISOMETRY:
        defect = isometry_defect(realization.system_matrix)
        if defect > tol:
            raise ValidationError(f"System matrix is not an isometry (||V*V - I|| = {defect:.3e})")
    logger.debug("Built %s realization with m=%d over a %dx%d pencil", mode.value, m, p, q)
    return realization


def _lifted_pencil(f: Realization, X: MatrixTuple) -> np.ndarray:
    if X.d != f.d:
        raise DimensionMismatchError(f"Realization has dimension {f.d}, point has {X.d}")
    return np.kron(np.eye(f.m, dtype=complex), pencil_eval(f.pencil, X))


def resolvent_term(f: Realization, X: MatrixTuple) -> np.ndarray:
    """[1 - (D (x) I_n) L(X)]^{-1} (C (x) I_n), an (m q n) x n matrix."""
    n = X.n
    lifted = _lifted_pencil(f, X)
    D_n = np.kron(f.D, np.eye(n, dtype=complex))
    operand = np.eye(D_n.shape[0], dtype=complex) - D_n @ lifted
    C_n = np.kron(f.C, np.eye(n, dtype=complex))
    return checked_solve(operand, C_n, what="resolvent near the ball boundary")


def evaluate(f: Realization, X: MatrixTuple) -> np.ndarray:
    """f(X) by the realization formula."""
    n = X.n
    lifted = _lifted_pencil(f, X)
    B_n = np.kron(f.B, np.eye(n, dtype=complex))
    return f.A * np.eye(n, dtype=complex) + B_n @ lifted @ resolvent_term(f, X)


def coefficient_row(f: Realization, w: Word) -> np.ndarray:
    """B L_{w_1} D L_{w_2} D ... D L_{w_k}, a 1 x (m q) row (|w| >= 1)."""
    if w.d != f.d:
        raise DimensionMismatchError(f"Word dimension {w.d} differs from {f.d}")
    if not w.letters:
        raise ValidationError("The coefficient row needs a nonempty word")
    row = f.B @ f.lifted_coefficient(w.letters[0])
    for letter in w.letters[1:]:
        row = row @ f.D @ f.lifted_coefficient(letter)
    return row


def power_series_coefficient(f: Realization, w: Word) -> complex:
    """c_w from the Neumann expansion; c_unit = A."""
    if not w.letters:
        if w.d != f.d:
            raise DimensionMismatchError(f"Word dimension {w.d} differs from {f.d}")
        return f.A
    return complex((coefficient_row(f, w) @ f.C)[0, 0])


def power_series_coefficients(f: Realization, K: int) -> dict[Word, complex]:
    """All c_w with |w| <= K, sharing prefix rows."""
    coefficients = {Word.unit(f.d): f.A}
    rows = {}
    for letter in range(1, f.d + 1):
        rows[Word((letter,), f.d)] = f.B @ f.lifted_coefficient(letter)
    for size in range(1, K + 1):
        next_rows = {}
        for w in words(f.d, size):
            row = rows[w]
            coefficients[w] = complex((row @ f.C)[0, 0])
            if size < K:
                tail = row @ f.D
                for letter in range(1, f.d + 1):
                    next_rows[Word(w.letters + (letter,), f.d)] = tail @ f.lifted_coefficient(letter)
        rows = next_rows
    return coefficients


def to_polynomial(f: Realization, K: int) -> FreePolynomial:
    """Truncation sum_{|w| <= K} c_w Z^w of the power series."""
    return FreePolynomial(f.d, power_series_coefficients(f, K))


def homogeneous_values(f: Realization, X: MatrixTuple, count: int) -> list[np.ndarray]:
    """[f_0(X), ..., f_{count-1}(X)], the homogeneous parts evaluated at X."""
    n = X.n
    lifted = _lifted_pencil(f, X)
    B_lifted = np.kron(f.B, np.eye(n, dtype=complex)) @ lifted
    D_lifted = np.kron(f.D, np.eye(n, dtype=complex)) @ lifted
    vector = np.kron(f.C, np.eye(n, dtype=complex))
    values = [f.A * np.eye(n, dtype=complex)]
    for _ in range(1, count):
        values.append(B_lifted @ vector)
        vector = D_lifted @ vector
    return values


def cesaro_eval(f: Realization, X: MatrixTuple, N: int) -> np.ndarray:
    """Sigma_N(f)(X) = sum_{k<N} (1 - k/N) f_k(X) without enumerating words."""
    if N < 1:
        raise ValidationError(f"Cesaro order must be positive, got {N}")
    result = np.zeros((X.n, X.n), dtype=complex)
    for k, value in enumerate(homogeneous_values(f, X, N)):
        result = result + (1 - k / N) * value
    return result


@dataclass(frozen=True)
class RemainderFactor:
    """g_w(X) = (B L_{w_1} D ... D L_{w_N} (x) I_n) [1 - (D (x) I_n) L(X)]^{-1} (C (x) I_n)."""

    realization: Realization
    word: Word

    @property
    def d(self) -> int:
        return self.realization.d

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        row = coefficient_row(self.realization, self.word)
        return np.kron(row, np.eye(X.n, dtype=complex)) @ resolvent_term(self.realization, X)


def remainder_factor(f: Realization, w: Word) -> RemainderFactor:
    if not w.letters:
        raise ValidationError("Remainder factors are indexed by nonempty words")
    if w.d != f.d:
        raise DimensionMismatchError(f"Word dimension {w.d} differs from {f.d}")
    return RemainderFactor(f, w)


@dataclass(frozen=True)
class ResolventTerm:
    """Z -> [1 - D (I_M (x) Q(Z))]^{-1} C as an evaluable nc function."""

    realization: Realization

    @property
    def d(self) -> int:
        return self.realization.d

    def evaluate(self, X: MatrixTuple) -> np.ndarray:
        return resolvent_term(self.realization, X)
