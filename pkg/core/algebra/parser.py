"""Text grammar for free nc polynomials.

Variables are z1..zd, products need an explicit ``*``, ``^k`` is the k-fold
nc product of its base and complex literals look like ``2``, ``1.5i`` or
``(0.5-2i)``.
"""

import logging
from functools import lru_cache

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from core.algebra.polynomial import FreePolynomial, poly_power
from core.algebra.word import Word
from core.errors import ExpressionSyntaxError, NegativeExponentError, VariableIndexError

logger = logging.getLogger(__name__)

POLYNOMIAL_GRAMMAR = r"""
    ?start: sum

    ?sum: product
        | sum "+" product   -> add
        | sum "-" product   -> sub

    ?product: unary
        | product "*" unary -> mul

    ?unary: power
        | "-" unary         -> neg
        | "+" unary

    ?power: atom
        | atom "^" EXPONENT -> pow

    ?atom: VARIABLE         -> variable
        | IMAGINARY         -> imaginary
        | REAL              -> real
        | "(" sum ")"

    VARIABLE: /z[0-9]+/
    IMAGINARY.2: /((\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)?i/
    REAL: /(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?/
    EXPONENT: /-?[0-9]+/

    %import common.WS
    %ignore WS
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(POLYNOMIAL_GRAMMAR, start="start", parser="lalr")


class _PolynomialBuilder(Transformer):
    """Folds the parse tree bottom-up into a FreePolynomial."""

    def __init__(self, d: int):
        super().__init__()
        self.d = d

    def variable(self, items):
        token: Token = items[0]
        index = int(token[1:])
        if not 1 <= index <= self.d:
            raise VariableIndexError(
                f"Variable {token} outside z1..z{self.d}", position=token.start_pos
            )
        return FreePolynomial.variable(index, self.d)

    def real(self, items):
        return FreePolynomial.constant(float(items[0]), self.d)

    def imaginary(self, items):
        magnitude = items[0][:-1]
        return FreePolynomial.constant(complex(0.0, float(magnitude) if magnitude else 1.0), self.d)

    def add(self, items):
        return items[0] + items[1]

    def sub(self, items):
        return items[0] - items[1]

    def mul(self, items):
        return items[0] * items[1]

    def neg(self, items):
        return -items[0]

    def pow(self, items):
        base, token = items
        k = int(token)
        if k < 0:
            raise NegativeExponentError(f"Negative exponent {k}", position=token.start_pos)
        return poly_power(base, k)


def parse(text: str, d: int) -> FreePolynomial:
    """Parse an expression in z1..zd into canonical word form."""
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        position = getattr(exc, "pos_in_stream", None)
        raise ExpressionSyntaxError(f"Cannot parse {text!r}", position=position) from None
    try:
        result = _PolynomialBuilder(d).transform(tree)
    except VisitError as exc:
        raise exc.orig_exc from None
    logger.debug("Parsed %r into %d terms", text, len(result.terms))
    return result


def _format_coefficient(c: complex) -> str:
    if c.imag == 0:
        return repr(abs(c.real))
    if c.real == 0:
        return f"{abs(c.imag)!r}i"
    sign = "+" if c.imag > 0 else "-"
    return f"({c.real!r}{sign}{abs(c.imag)!r}i)"


def _leading_sign(c: complex) -> int:
    """-1 when the coefficient prints as a negated magnitude."""
    if c.imag == 0:
        return -1 if c.real < 0 else 1
    if c.real == 0:
        return -1 if c.imag < 0 else 1
    return 1


def format_polynomial(P: FreePolynomial) -> str:
    """Render P so that parse(format_polynomial(P), P.d) == P."""
    if P.is_zero():
        return "0"
    pieces = []
    for word, c in P.terms.items():
        sign = _leading_sign(c)
        magnitude = _format_coefficient(c)
        monomial = str(word) if word.letters else ""
        if not monomial:
            body = magnitude
        elif magnitude in ("1.0",):
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if sign < 0 else body)
        else:
            pieces.append(f"- {body}" if sign < 0 else f"+ {body}")
    return " ".join(pieces)


def parse_word(text: str, d: int) -> Word:
    """Parse a word given as digits ("121") or as a monomial ("z1*z2*z1")."""
    text = text.strip()
    if not text or text == "1":
        return Word.unit(d)
    if text.startswith("z"):
        P = parse(text, d)
        if len(P.terms) != 1 or next(iter(P.terms.values())) != 1:
            raise ExpressionSyntaxError(f"{text!r} is not a single monomial")
        return next(iter(P.terms))
    return Word.from_digits(text, d)
