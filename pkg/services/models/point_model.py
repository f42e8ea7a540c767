from pydantic import BaseModel, model_validator

from core.matrix.matrix_tuple import MatrixTuple
from services.models.complex_values import ComplexMatrix, from_array, to_array


class PointModel(BaseModel):
    """A matrix tuple: d matrices, each n x n of [re, im] pairs."""

    n: int
    d: int
    entries: list[ComplexMatrix]

    @model_validator(mode="after")
    def check_shape(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive")
        if len(self.entries) != self.d:
            raise ValueError(f"expected {self.d} matrices, got {len(self.entries)}")
        for j, matrix in enumerate(self.entries, start=1):
            if len(matrix) != self.n or any(len(row) != self.n for row in matrix):
                raise ValueError(f"matrix {j} is not {self.n} x {self.n}")
        return self

    def to_core(self) -> MatrixTuple:
        return MatrixTuple(tuple(to_array(matrix) for matrix in self.entries))

    @classmethod
    def from_core(cls, X: MatrixTuple) -> "PointModel":
        return cls(n=X.n, d=X.d, entries=[from_array(matrix) for matrix in X.matrices])
