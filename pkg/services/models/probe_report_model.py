from typing import Optional

from pydantic import BaseModel

from core.probe.search import ProbeReport
from services.models.point_model import PointModel


class ProbeReportModel(BaseModel):
    target: str
    ball: str
    level: int
    budget: int
    seed: int
    best_value: float
    evaluations: int
    failures: int
    trajectory: list[tuple[int, float]]
    argmax: Optional[PointModel] = None

    @classmethod
    def from_core(cls, report: ProbeReport) -> "ProbeReportModel":
        return cls(
            target=report.target,
            ball=report.ball,
            level=report.level,
            budget=report.budget,
            seed=report.seed,
            best_value=report.best_value,
            evaluations=report.evaluations,
            failures=report.failures,
            trajectory=list(report.trajectory),
            argmax=PointModel.from_core(report.argmax) if report.argmax is not None else None,
        )
