from pydantic import BaseModel, model_validator

from core.ball.pencil import Pencil
from services.models.complex_values import ComplexMatrix, from_array, to_array


class PencilModel(BaseModel):
    """Coefficients Q_1..Q_d, each p x q of [re, im] pairs."""

    d: int
    p: int
    q: int
    coefficients: list[ComplexMatrix]

    @model_validator(mode="after")
    def check_shape(self):
        if len(self.coefficients) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {len(self.coefficients)}")
        for j, matrix in enumerate(self.coefficients, start=1):
            if len(matrix) != self.p or any(len(row) != self.q for row in matrix):
                raise ValueError(f"coefficient {j} is not {self.p} x {self.q}")
        return self

    def to_core(self) -> Pencil:
        return Pencil(tuple(to_array(matrix) for matrix in self.coefficients))

    @classmethod
    def from_core(cls, pencil: Pencil) -> "PencilModel":
        return cls(
            d=pencil.d,
            p=pencil.p,
            q=pencil.q,
            coefficients=[from_array(c) for c in pencil.coefficients],
        )
