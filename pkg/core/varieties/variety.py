"""Algebraic nc subvarieties of operator balls and polynomial maps between them."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from configs.configs import Configs
from core.algebra.parser import parse
from core.algebra.polynomial import FreePolynomial, substitute
from core.ball.ball import Inside, OperatorBall, membership
from core.errors import DimensionMismatchError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import MatrixTuple, eval_poly
from core.probe.sampling import PointSampler, sample_in_ball

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AlgebraicVariety:
    """Common zero set of ``generators`` inside ``ambient``."""

    ambient: OperatorBall
    generators: tuple[FreePolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for P in self.generators:
            if P.d != self.ambient.d:
                raise DimensionMismatchError(f"Generator of dimension {P.d} in a ball of dimension {self.ambient.d}")

    @property
    def d(self) -> int:
        return self.ambient.d

    def contains(self, X: MatrixTuple, tol: Optional[float] = None) -> bool:
        return variety_membership(self, X, tol)


def zero_set(ball: OperatorBall, texts: Sequence[str]) -> AlgebraicVariety:
    return AlgebraicVariety(ball, tuple(parse(text, ball.d) for text in texts))


def generator_residual(V: AlgebraicVariety, X: MatrixTuple) -> float:
    """max over generators of ||P(X)||; 0 without generators."""
    return max((op_norm(eval_poly(P, X)) for P in V.generators), default=0.0)


def variety_membership(V: AlgebraicVariety, X: MatrixTuple, tol: Optional[float] = None) -> bool:
    if X.d != V.d:
        raise DimensionMismatchError(f"Variety has dimension {V.d}, point has {X.d}")
    tol = Configs().VARIETY_TOL if tol is None else tol
    if not isinstance(membership(V.ambient, X), Inside):
        return False
    return generator_residual(V, X) <= tol


@dataclass(frozen=True)
class HomogeneityWitness:
    point: MatrixTuple
    scale: complex
    residual: float


@dataclass(frozen=True)
class HomogeneityResult:
    passed: bool
    checked: int
    witness: Optional[HomogeneityWitness] = None

    def __bool__(self) -> bool:
        return self.passed


def _random_scales(rng: np.random.Generator, count: int) -> list[complex]:
    radii = np.sqrt(rng.uniform(0, 1, count))
    angles = rng.uniform(0, 2 * np.pi, count)
    return [complex(r * np.exp(1j * t)) for r, t in zip(radii, angles)]


def homogeneity_sample(
    V: AlgebraicVariety,
    sampler: PointSampler,
    samples: int,
    lambdas: Optional[Sequence[complex]],
    seed: int,
    n: int = 1,
    tol: Optional[float] = None,
) -> HomogeneityResult:
    """Check lambda X in V for sampled X in V and lambda in the unit disk.

    With ``lambdas`` None, three scales per point are drawn uniformly from the
    disk. Stops at the first failure and returns it as the witness.
    """
    if lambdas is not None:
        for scale in lambdas:
            if abs(scale) >= 1:
                raise ValidationError(f"Scale {scale} is not in the open unit disk")
    checked = 0
    for index in range(samples):
        rng = np.random.default_rng(seed + index)
        X = sampler(rng, n)
        if not variety_membership(V, X, tol):
            raise ValidationError(
                f"Sampler produced a point outside the variety (residual {generator_residual(V, X):.3e})"
            )
        scales = list(lambdas) if lambdas is not None else _random_scales(rng, 3)
        for scale in scales:
            checked += 1
            Y = X.scaled(scale)
            if not variety_membership(V, Y, tol):
                witness = HomogeneityWitness(point=X, scale=complex(scale), residual=generator_residual(V, Y))
                logger.info("Homogeneity fails at sample %d, scale %s", index, scale)
                return HomogeneityResult(passed=False, checked=checked, witness=witness)
    return HomogeneityResult(passed=True, checked=checked)


@dataclass(frozen=True, eq=False)
class PolynomialMap:
    """X -> (P_1(X), ..., P_e(X)) with every P_i of source dimension d."""

    components: tuple[FreePolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValidationError("A polynomial map needs at least one component")
        d = self.components[0].d
        for P in self.components:
            if P.d != d:
                raise DimensionMismatchError("Components of a polynomial map must share one dimension")

    @classmethod
    def from_texts(cls, texts: Sequence[str], d: int) -> "PolynomialMap":
        return cls(tuple(parse(text, d) for text in texts))

    @property
    def d(self) -> int:
        return self.components[0].d

    @property
    def e(self) -> int:
        return len(self.components)

    def evaluate(self, X: MatrixTuple) -> MatrixTuple:
        return MatrixTuple(tuple(eval_poly(P, X) for P in self.components))

    def compose(self, inner: "PolynomialMap") -> "PolynomialMap":
        """self o inner, composed at the polynomial level."""
        if inner.e != self.d:
            raise DimensionMismatchError(f"Inner map has {inner.e} components, outer map needs {self.d}")
        return PolynomialMap(tuple(substitute(P, inner.components) for P in self.components))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialMap):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)


def parameterized_sampler(parameterization: PolynomialMap, parameter_ball: OperatorBall, margin: float = 0.5) -> PointSampler:
    """Points parameterization(T) for T drawn in ``parameter_ball``."""
    if parameterization.d != parameter_ball.d:
        raise DimensionMismatchError("Parameterization and parameter ball differ in dimension")

    def sampler(rng: np.random.Generator, n: int) -> MatrixTuple:
        return parameterization.evaluate(sample_in_ball(parameter_ball, n, margin, rng))

    return sampler
