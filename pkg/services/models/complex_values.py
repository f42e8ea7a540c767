"""[re, im] pairs as they appear in every JSON input and output."""

from typing import Annotated

import numpy as np
from pydantic import Field

ComplexPair = Annotated[list[float], Field(min_length=2, max_length=2)]
ComplexMatrix = list[list[ComplexPair]]


def to_complex(pair: ComplexPair) -> complex:
    return complex(pair[0], pair[1])


def from_complex(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def to_array(rows: ComplexMatrix) -> np.ndarray:
    return np.array([[to_complex(pair) for pair in row] for row in rows], dtype=complex)


def from_array(matrix: np.ndarray) -> ComplexMatrix:
    return [[from_complex(value) for value in row] for row in np.asarray(matrix)]
