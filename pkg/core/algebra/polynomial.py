"""Free nc polynomials: sparse complex combinations of free words.

Coefficients compare exactly; only exact zeros are pruned.
"""

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Protocol, Sequence, Union

from core.algebra.word import Word, words
from core.errors import DimensionMismatchError, ValidationError

logger = logging.getLogger(__name__)

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class FreePolynomial:
    """A finite formal sum P = sum_w c_w Z^w over words in d letters."""

    d: int
    terms: Mapping[Word, complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1:
            raise ValidationError(f"Dimension must be positive, got {self.d}")
        pruned = {}
        for word, coefficient in self.terms.items():
            if word.d != self.d:
                raise DimensionMismatchError(
                    f"Word {word.digits()!r} has dimension {word.d}, polynomial has {self.d}"
                )
            coefficient = complex(coefficient)
            if coefficient != 0:
                pruned[word] = coefficient
        ordered = dict(sorted(pruned.items(), key=lambda item: item[0].sort_key()))
        object.__setattr__(self, "terms", MappingProxyType(ordered))

    # Constructors

    @classmethod
    def zero(cls, d: int) -> "FreePolynomial":
        return cls(d, {})

    @classmethod
    def constant(cls, value: Scalar, d: int) -> "FreePolynomial":
        return cls(d, {Word.unit(d): value})

    @classmethod
    def variable(cls, j: int, d: int) -> "FreePolynomial":
        return cls(d, {Word((j,), d): 1})

    @classmethod
    def monomial(cls, word: Word, coefficient: Scalar = 1) -> "FreePolynomial":
        return cls(word.d, {word: coefficient})

    # Queries

    @property
    def degree(self) -> int:
        """Largest word size; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    @property
    def min_degree(self) -> int:
        """Smallest word size; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return min(len(w) for w in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> complex:
        if word.d != self.d:
            raise DimensionMismatchError(f"Word dimension {word.d} differs from {self.d}")
        return self.terms.get(word, 0j)

    def items(self):
        return self.terms.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreePolynomial):
            return NotImplemented
        return self.d == other.d and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.d, tuple(self.terms.items())))

    def __repr__(self) -> str:
        from core.algebra.parser import format_polynomial

        return f"FreePolynomial(d={self.d}, {format_polynomial(self)!r})"

    # Arithmetic

    def __add__(self, other):
        if isinstance(other, FreePolynomial):
            return poly_add(self, other)
        if isinstance(other, (int, float, complex)):
            return poly_add(self, FreePolynomial.constant(other, self.d))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "FreePolynomial":
        return poly_scale(-1, self)

    def __sub__(self, other):
        if isinstance(other, (FreePolynomial, int, float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FreePolynomial):
            return poly_mul(self, other)
        if isinstance(other, (int, float, complex)):
            return poly_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return poly_scale(other, self)
        return NotImplemented

    def __pow__(self, k: int) -> "FreePolynomial":
        return poly_power(self, k)


class CoefficientSource(Protocol):
    """Anything with word-indexed power series coefficients."""

    d: int

    def coefficient(self, word: Word) -> complex: ...


def _check_dims(P: FreePolynomial, Q: FreePolynomial) -> None:
    if P.d != Q.d:
        raise DimensionMismatchError(f"Polynomials of dimension {P.d} and {Q.d} cannot be combined")


def poly_add(P: FreePolynomial, Q: FreePolynomial) -> FreePolynomial:
    _check_dims(P, Q)
    total = dict(P.terms)
    for word, coefficient in Q.terms.items():
        total[word] = total.get(word, 0j) + coefficient
    return FreePolynomial(P.d, total)


def poly_scale(scalar: Scalar, P: FreePolynomial) -> FreePolynomial:
    return FreePolynomial(P.d, {word: scalar * c for word, c in P.terms.items()})


def poly_mul(P: FreePolynomial, Q: FreePolynomial) -> FreePolynomial:
    """Free convolution: c^{PQ}_w = sum over w = uv of c^P_u c^Q_v."""
    _check_dims(P, Q)
    product: dict[Word, complex] = {}
    for u, a in P.terms.items():
        for v, b in Q.terms.items():
            uv = u * v
            product[uv] = product.get(uv, 0j) + a * b
    return FreePolynomial(P.d, product)


def poly_power(P: FreePolynomial, k: int) -> FreePolynomial:
    """k-fold nc product P * ... * P; P^0 is the constant 1."""
    if k < 0:
        raise ValidationError(f"Negative exponent {k}")
    result = FreePolynomial.constant(1, P.d)
    for _ in range(k):
        result = poly_mul(result, P)
    return result


def poly_sum(polynomials: Iterable[FreePolynomial], d: int) -> FreePolynomial:
    result = FreePolynomial.zero(d)
    for P in polynomials:
        result = poly_add(result, P)
    return result


def homogeneous_component(P: FreePolynomial, k: int) -> FreePolynomial:
    """F_k(Z) = sum_{|w|=k} c_w Z^w."""
    return FreePolynomial(P.d, {w: c for w, c in P.terms.items() if len(w) == k})


def homogeneous_components(P: FreePolynomial) -> list[FreePolynomial]:
    """[F_0, ..., F_deg]; their sum is P."""
    return [homogeneous_component(P, k) for k in range(P.degree + 1)]


def dilate(P: FreePolynomial, r: Scalar) -> FreePolynomial:
    """P_r(Z) = P(rZ), i.e. c_w -> r^{|w|} c_w."""
    return FreePolynomial(P.d, {w: c * r ** len(w) for w, c in P.terms.items()})


def substitute(P: FreePolynomial, images: Sequence[FreePolynomial]) -> FreePolynomial:
    """Composition P(G_1, ..., G_d) of polynomials."""
    if len(images) != P.d:
        raise DimensionMismatchError(f"Need {P.d} substitutes, got {len(images)}")
    target_d = images[0].d if images else P.d
    for G in images:
        if G.d != target_d:
            raise DimensionMismatchError("Substitutes must share one dimension")
    powers: dict[Word, FreePolynomial] = {}

    def image_of(word: Word) -> FreePolynomial:
        if word in powers:
            return powers[word]
        if not word.letters:
            value = FreePolynomial.constant(1, target_d)
        else:
            value = poly_mul(image_of(word[:-1]), images[word.letters[-1] - 1])
        powers[word] = value
        return value

    result = FreePolynomial.zero(target_d)
    for word, c in P.terms.items():
        result = poly_add(result, poly_scale(c, image_of(word)))
    return result


def cesaro_sum(source: CoefficientSource, N: int) -> FreePolynomial:
    """Sigma_N(f) = sum_{0 <= k < N} (1 - k/N) f_k as a polynomial.

    Polynomials contribute only their stored words; any other coefficient
    source is enumerated over every word of size < N.
    """
    if N < 1:
        raise ValidationError(f"Cesaro order must be positive, got {N}")
    if isinstance(source, FreePolynomial):
        weighted = {w: (1 - len(w) / N) * c for w, c in source.terms.items() if len(w) < N}
        return FreePolynomial(source.d, weighted)
    weighted = {}
    for k in range(N):
        weight = 1 - k / N
        for w in words(source.d, k):
            weighted[w] = weight * source.coefficient(w)
    return FreePolynomial(source.d, weighted)


def left_divide(P: FreePolynomial, N: int) -> dict[Word, FreePolynomial]:
    """Quotients f_w with P = sum_{|w|=N} Z^w f_w and c^{f_w}_v = c^P_{wv}.

    Every stored word of P must have size at least N.
    """
    if N < 1:
        raise ValidationError(f"Division order must be positive, got {N}")
    short = [w for w in P.terms if len(w) < N]
    if short:
        raise ValidationError(
            f"Polynomial has words shorter than {N} (e.g. {short[0].digits()!r}); it is not in J_{N}"
        )
    quotients: dict[Word, dict[Word, complex]] = {w: {} for w in words(P.d, N)}
    for word, c in P.terms.items():
        quotients[word[:N]][word[N:]] = c
    return {w: FreePolynomial(P.d, terms) for w, terms in quotients.items()}


def right_divide(P: FreePolynomial, N: int) -> dict[Word, FreePolynomial]:
    """Quotients g_w with P = sum_{|w|=N} g_w Z^w and c^{g_w}_v = c^P_{vw}."""
    if N < 1:
        raise ValidationError(f"Division order must be positive, got {N}")
    short = [w for w in P.terms if len(w) < N]
    if short:
        raise ValidationError(
            f"Polynomial has words shorter than {N} (e.g. {short[0].digits()!r}); it is not in J_{N}"
        )
    quotients: dict[Word, dict[Word, complex]] = {w: {} for w in words(P.d, N)}
    for word, c in P.terms.items():
        split = len(word) - N
        quotients[word[split:]][word[:split]] = c
    return {w: FreePolynomial(P.d, terms) for w, terms in quotients.items()}


def to_triples(P: FreePolynomial) -> list[tuple[str, float, float]]:
    """Canonical serialization: length-lex (digits, re, im) triples."""
    return [(w.digits(), c.real, c.imag) for w, c in P.terms.items()]


def from_triples(triples: Iterable[Sequence], d: int) -> FreePolynomial:
    terms: dict[Word, complex] = {}
    for digits, re, im in triples:
        word = Word.from_digits(str(digits), d)
        terms[word] = terms.get(word, 0j) + complex(float(re), float(im))
    return FreePolynomial(d, terms)
