from pydantic import BaseModel

from core.realization.realization import Realization, RealizationMode, make_realization
from services.models.complex_values import (
    ComplexMatrix,
    ComplexPair,
    from_array,
    from_complex,
    to_array,
    to_complex,
)
from services.models.pencil_model import PencilModel


class RealizationModel(BaseModel):
    """System data (A, B, C, D) over a pencil; B and C are flat vectors."""

    pencil: PencilModel
    m: int
    A: ComplexPair
    B: list[ComplexPair]
    C: list[ComplexPair]
    D: ComplexMatrix
    mode: RealizationMode = RealizationMode.CONTRACTION

    def to_core(self) -> Realization:
        return make_realization(
            pencil=self.pencil.to_core(),
            m=self.m,
            A=to_complex(self.A),
            B=[to_complex(b) for b in self.B],
            C=[to_complex(c) for c in self.C],
            D=to_array(self.D),
            mode=self.mode,
        )

    @classmethod
    def from_core(cls, f: Realization) -> "RealizationModel":
        return cls(
            pencil=PencilModel.from_core(f.pencil),
            m=f.m,
            A=from_complex(f.A),
            B=[from_complex(b) for b in f.B.ravel()],
            C=[from_complex(c) for c in f.C.ravel()],
            D=from_array(f.D),
            mode=f.mode,
        )
