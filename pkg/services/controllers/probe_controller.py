import logging
from typing import Optional, Sequence, Union

import allure

from constants.numerics import PROBE_MARGINS
from core.algebra.polynomial import FreePolynomial
from core.ball.ball import OperatorBall
from core.ball.pencil import Pencil
from core.ncdiff.evaluable import EvaluableNcFunction
from core.probe.regularity import regularity_factors
from core.probe.scans import AllBoundary, AllInterior, Path, blowup_scan, dichotomy_scan
from core.probe.search import ProbeReport, estimate_sup
from core.realization.realization import Realization
from core.utils.csv import CsvUtils
from services.controllers.base_controller import BaseController, CsvTable
from services.models.probe_report_model import ProbeReportModel

logger = logging.getLogger(__name__)


class ProbeController(BaseController):
    @allure.step("Estimate the sup-norm over level {n} with budget {budget}, seed {seed}")
    def estimate(
        self,
        f: EvaluableNcFunction,
        ball: OperatorBall,
        n: int,
        budget: int,
        seed: int,
        target: str = "",
        margin: Optional[float] = None,
    ) -> tuple[ProbeReport, CsvTable]:
        margins = PROBE_MARGINS if margin is None else (margin,)
        report = estimate_sup(f, ball, n, budget, seed, target=target, margins=margins)
        allure.attach(
            ProbeReportModel.from_core(report).model_dump_json(indent=2),
            name="probe-report.json",
            attachment_type=allure.attachment_type.JSON,
        )
        table = CsvTable("probe", ["iteration", "sample", "value", "boundary_distance", "seed"], seed=seed)
        for (evaluation, value), distance in zip(report.trajectory, report.distances):
            table.rows.append([len(table.rows), evaluation, value, distance, seed])
        return report, self.attach_table(table)

    @allure.step("Estimate the order-{N} regularity factors at level {n}")
    def regularity(
        self,
        f: Union[Realization, FreePolynomial],
        N: int,
        ball: OperatorBall,
        n: int,
        budget: int,
        seed: int,
    ) -> CsvTable:
        report = regularity_factors(f, N, ball, n, budget, seed)
        table = CsvTable(
            "probe",
            ["factor", "order", "level", "budget", "value", "half_budget_value", "nonconvergent", "seed"],
            seed=seed,
        )
        table.rows.append([
            "row", N, n, budget, report.row_factor, report.row_factor, False, seed,
        ])
        table.rows.append([
            "column", N, n, budget, report.column_factor, report.column_half_budget.best_value,
            report.nonconvergent, seed,
        ])
        return self.attach_table(table)

    @allure.step("Scan for blowup along a boundary-approaching path")
    def blowup(
        self,
        g: EvaluableNcFunction,
        path: Path,
        eps_list: Sequence[float],
        ball: OperatorBall,
    ) -> CsvTable:
        scan = blowup_scan(g, path, eps_list, ball)
        table = CsvTable("blowup", ["iteration", "epsilon", "re", "im", "modulus", "boundary_distance"])
        for index, row in enumerate(scan.rows):
            table.rows.append([
                index, row.epsilon, *CsvUtils.complex_columns(row.value), row.norm, row.boundary_distance,
            ])
        logger.info("Monotone growth along the path: %s", scan.monotone_growth)
        return self.attach_table(table)

    @allure.step("Classify ||P(F(X))|| over {samples} samples, seed {seed}")
    def dichotomy(
        self,
        F: Sequence[EvaluableNcFunction],
        source: OperatorBall,
        target: Pencil,
        samples: int,
        seed: int,
        n: int = 1,
    ) -> CsvTable:
        result = dichotomy_scan(F, source, target, samples, seed, n=n)
        if isinstance(result, AllInterior):
            verdict = "interior"
        elif isinstance(result, AllBoundary):
            verdict = "boundary"
        else:
            verdict = "mixed"
        logger.info("Dichotomy scan over %d samples: %s", samples, verdict)
        table = CsvTable("dichotomy", ["sample", "norm", "verdict", "seed"], seed=seed)
        for index, norm in enumerate(result.norms):
            table.rows.append([index, norm, verdict, seed])
        return self.attach_table(table)
