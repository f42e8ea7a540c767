import logging

import allure
import numpy as np

from constants.builtins import REPRODUCE_TARGETS
from core.ball.ball import polydisk
from core.errors import ShorthandError
from core.matrix.matrix_tuple import MatrixTuple, from_scalars, tuple_distance
from core.ncdiff.difference import DeltaFirstFunction, gleason_split
from core.ncdiff.evaluable import evaluate_scalar
from core.probe.sampling import random_contraction, uniform_disk
from core.probe.scans import blowup_scan, builtin_path
from core.realization.examples import closed_form_5_2, example_5_2
from core.utils.csv import CsvUtils
from core.varieties.examples import example_4_12
from core.varieties.variety import generator_residual, variety_membership
from services.controllers.base_controller import BaseController, CsvTable

logger = logging.getLogger(__name__)

BLOWUP_EPSILONS = (0.1, 0.01, 0.001)
SAMPLE_RADIUS = 0.99


class ReproduceController(BaseController):
    def reproduce(self, target: str, seed: int, samples: int = 10) -> CsvTable:
        handlers = {
            "ex52": self.example_5_2_table,
            "ex53": self.delta_blowup_table,
            "ex412": self.curve_pair_table,
            "gleason": self.gleason_table,
        }
        if target not in handlers:
            raise ShorthandError(f"Unknown reproduce target '{target}'; expected one of {', '.join(REPRODUCE_TARGETS)}")
        return handlers[target](seed, samples)

    @allure.step("Compare the bidisk realization with its closed form at {samples} points")
    def example_5_2_table(self, seed: int, samples: int) -> CsvTable:
        f = example_5_2()
        rng = np.random.default_rng(seed)
        x1s, x2s = uniform_disk(rng, samples, SAMPLE_RADIUS), uniform_disk(rng, samples, SAMPLE_RADIUS)
        table = CsvTable(
            "reproduce",
            ["x1_re", "x1_im", "x2_re", "x2_im", "value_re", "value_im", "closed_re", "closed_im", "abs_diff"],
            seed=seed,
        )
        for x1, x2 in zip(x1s, x2s):
            value = evaluate_scalar(f, from_scalars([x1, x2]))
            closed = closed_form_5_2(complex(x1), complex(x2))
            table.rows.append([
                *CsvUtils.complex_columns(x1),
                *CsvUtils.complex_columns(x2),
                *CsvUtils.complex_columns(value),
                *CsvUtils.complex_columns(closed),
                abs(value - closed),
            ])
        return self.attach_table(table)

    @allure.step("Tabulate Delta_1 f(0, x(eps)) along the builtin path")
    def delta_blowup_table(self, seed: int, samples: int) -> CsvTable:
        scan = blowup_scan(DeltaFirstFunction(example_5_2(), 1), builtin_path, BLOWUP_EPSILONS, polydisk(2))
        table = CsvTable("reproduce", ["epsilon", "re", "im", "modulus", "closed_modulus", "boundary_distance"], seed=seed)
        for row in scan.rows:
            closed = float(np.sqrt(0.25 + 0.25 / row.epsilon**2))
            table.rows.append([row.epsilon, *CsvUtils.complex_columns(row.value), row.norm, closed, row.boundary_distance])
        return self.attach_table(table)

    @allure.step("Check the curve pair maps and roundtrips at levels 1 to 4")
    def curve_pair_table(self, seed: int, samples: int) -> CsvTable:
        pair = example_4_12()
        rng = np.random.default_rng(seed)
        table = CsvTable(
            "reproduce",
            ["level", "in_v1", "forward_in_v2", "roundtrip_error", "half_scale_residual"],
            seed=seed,
        )
        for n in range(1, 5):
            T = random_contraction(n, rng, norm=0.9)
            X = pair.parameterize_v1.evaluate(MatrixTuple((T,)))
            Y = pair.forward.evaluate(X)
            back = pair.backward.evaluate(Y)
            table.rows.append([
                n,
                variety_membership(pair.v1, X),
                variety_membership(pair.v2, Y),
                tuple_distance(back, X),
                generator_residual(pair.v1, X.scaled(0.5)),
            ])
        return self.attach_table(table)

    @allure.step("Split the bidisk function at {samples} random points")
    def gleason_table(self, seed: int, samples: int) -> CsvTable:
        f = example_5_2()
        rng = np.random.default_rng(seed)
        x1s, x2s = uniform_disk(rng, samples, SAMPLE_RADIUS), uniform_disk(rng, samples, SAMPLE_RADIUS)
        table = CsvTable("reproduce", ["x1_re", "x1_im", "x2_re", "x2_im", "g1_abs", "g2_abs", "defect"], seed=seed)
        f0 = evaluate_scalar(f, from_scalars([0, 0]))
        for x1, x2 in zip(x1s, x2s):
            g1, g2 = gleason_split(f, [x1, x2])
            value = evaluate_scalar(f, from_scalars([x1, x2]))
            defect = abs(value - (f0 + g1 * x1 + g2 * x2))
            table.rows.append([
                *CsvUtils.complex_columns(x1), *CsvUtils.complex_columns(x2), abs(g1), abs(g2), defect,
            ])
        return self.attach_table(table)
