"""The curves {(X, X^2)} and {(X, X^3)} in the nc bidisk."""

from dataclasses import dataclass

from core.ball.ball import polydisk
from core.varieties.variety import AlgebraicVariety, PolynomialMap, zero_set


@dataclass(frozen=True)
class CurvePair:
    v1: AlgebraicVariety
    v2: AlgebraicVariety
    forward: PolynomialMap
    backward: PolynomialMap
    parameterize_v1: PolynomialMap
    parameterize_v2: PolynomialMap


def example_4_12() -> CurvePair:
    """V1 = zeros(Z2 - Z1^2), V2 = zeros(Z2 - Z1^3) with G = (Z1, Z1^3) and F = (Z1, Z1^2).

    G maps V1 onto V2 and F maps V2 onto V1; F o G and G o F are the identity
    on the respective curves but not as polynomial maps on the whole bidisk.
    """
    bidisk = polydisk(2)
    return CurvePair(
        v1=zero_set(bidisk, ["z2 - z1^2"]),
        v2=zero_set(bidisk, ["z2 - z1^3"]),
        forward=PolynomialMap.from_texts(["z1", "z1^3"], 2),
        backward=PolynomialMap.from_texts(["z1", "z1^2"], 2),
        parameterize_v1=PolynomialMap.from_texts(["z1", "z1^2"], 1),
        parameterize_v2=PolynomialMap.from_texts(["z1", "z1^3"], 1),
    )
