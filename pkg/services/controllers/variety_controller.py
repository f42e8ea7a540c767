import allure

from core.ball.ball import boundary_distance
from core.matrix.matrix_tuple import MatrixTuple
from core.varieties.variety import AlgebraicVariety, generator_residual, variety_membership
from services.controllers.base_controller import BaseController, CsvTable


class VarietyController(BaseController):
    @allure.step("Check variety membership at a point")
    def membership(self, V: AlgebraicVariety, X: MatrixTuple, tol=None) -> CsvTable:
        table = CsvTable("variety", ["member", "residual", "boundary_distance"])
        table.rows.append([
            variety_membership(V, X, tol),
            generator_residual(V, X),
            boundary_distance(V.ambient, X),
        ])
        return self.attach_table(table)
