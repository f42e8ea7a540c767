from pydantic import BaseModel, Field

from core.ball.ball import OperatorBall
from core.varieties.variety import AlgebraicVariety, zero_set


class VarietyModel(BaseModel):
    """Ambient ball shorthand plus generator polynomials as text."""

    ball: str
    generators: list[str] = Field(default_factory=list)

    def to_core(self, ambient: OperatorBall) -> AlgebraicVariety:
        return zero_set(ambient, self.generators)
