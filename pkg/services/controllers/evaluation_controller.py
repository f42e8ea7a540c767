import logging
from typing import Optional, Sequence, Union

import allure
import numpy as np

from core.algebra.polynomial import FreePolynomial
from core.algebra.word import Word, words_up_to
from core.errors import DimensionMismatchError
from core.matrix.matrix_tuple import MatrixTuple
from core.ncdiff.difference import delta_first
from core.ncdiff.evaluable import EvaluableNcFunction, evaluate
from core.ncdiff.taylor import tt_check
from core.realization.realization import Realization, power_series_coefficients
from core.utils.csv import CsvUtils
from services.controllers.base_controller import BaseController, CsvTable

logger = logging.getLogger(__name__)

DEFAULT_COEFFICIENT_ORDER = 2


class EvaluationController(BaseController):
    @allure.step("Evaluate the function at a point")
    def evaluate(self, f: EvaluableNcFunction, X: MatrixTuple) -> CsvTable:
        value = evaluate(f, X)
        table = CsvTable("eval", ["row", "col", "re", "im"])
        for (i, j), entry in np.ndenumerate(value):
            table.rows.append([i + 1, j + 1, *CsvUtils.complex_columns(entry)])
        return self.attach_table(table)

    @allure.step("List power series coefficients")
    def coefficients(
        self,
        f: Union[Realization, FreePolynomial],
        word: Optional[Word] = None,
        order: Optional[int] = None,
    ) -> CsvTable:
        """A single coefficient, every c_w with |w| <= order, or the polynomial's stored terms."""
        table = CsvTable("coeff", ["word", "re", "im"])
        if word is not None:
            table.rows.append([word.digits(), *CsvUtils.complex_columns(f.coefficient(word))])
        elif isinstance(f, FreePolynomial):
            for w, c in f.items():
                if order is None or len(w) <= order:
                    table.rows.append([w.digits(), *CsvUtils.complex_columns(c)])
        else:
            order = DEFAULT_COEFFICIENT_ORDER if order is None else order
            coefficients = power_series_coefficients(f, order)
            for w in words_up_to(f.d, order):
                table.rows.append([w.digits(), *CsvUtils.complex_columns(coefficients[w])])
        return self.attach_table(table)

    @allure.step("Compute the first difference-differential at a scalar point")
    def delta(self, f: EvaluableNcFunction, x: Sequence[complex], h: Sequence[complex]) -> CsvTable:
        value = delta_first(f, x, h)
        table = CsvTable("delta", ["re", "im", "modulus"])
        table.rows.append([*CsvUtils.complex_columns(value), abs(value)])
        return self.attach_table(table)

    @allure.step("Check the order-{N} TT expansion")
    def tt_check(
        self,
        f: Union[Realization, FreePolynomial],
        X: MatrixTuple,
        N: int,
        tol: Optional[float] = None,
    ) -> CsvTable:
        if f.d != X.d:
            raise DimensionMismatchError(f"Function has dimension {f.d}, point has {X.d}")
        report = tt_check(f, X, N, tol)
        logger.info("TT check order %d: defect %.3e (tol %.1e)", N, report.defect, report.tol)
        table = CsvTable("tt-check", ["order", "level", "defect", "tol", "passed"])
        table.rows.append([N, X.n, report.defect, report.tol, report.passed])
        return self.attach_table(table)

