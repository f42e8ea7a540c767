import numpy as np
import pytest

from core.algebra.parser import parse
from core.algebra.word import Word
from core.errors import DimensionMismatchError, OutsideBallError, ValidationError
from core.matrix.linalg import op_norm
from core.matrix.matrix_tuple import block_upper_triangular, from_scalars, upper_right_block
from core.ncdiff.difference import DeltaFirstFunction, d1_difference_quotient, delta_first, gleason_split
from core.ncdiff.evaluable import evaluate, evaluate_scalar
from core.probe.sampling import sample_in_ball, uniform_disk
from core.probe.scans import builtin_path
from core.ball.ball import polydisk
from core.realization.examples import closed_form_5_2, closed_form_delta_5_2, example_5_2
from core.realization.realization import remainder_factor


def bidisk_points(rng, count: int = 1000, radius: float = 0.99):
    return list(zip(uniform_disk(rng, count, radius), uniform_disk(rng, count, radius)))


class TestDeltaFirst:
    @pytest.fixture(autouse=True)
    def setup(self):
        self.f = example_5_2()

    @pytest.mark.acceptance
    def test_first_difference_closed_form(self, rng):
        for x1, x2 in bidisk_points(rng):
            expected = closed_form_delta_5_2(x1, x2)
            assert abs(delta_first(self.f, [x1, x2], [1, 0]) - expected[0]) <= 1e-10
            assert abs(delta_first(self.f, [x1, x2], [0, 1]) - expected[1]) <= 1e-10

    def test_linear_in_the_direction(self, rng):
        for x1, x2 in bidisk_points(rng, 50, radius=0.9):
            a, b = 0.3 - 1.2j, 2.0
            h, k = [0.4, -1j], [1.5, 0.25]
            combined = [a * h[0] + b * k[0], a * h[1] + b * k[1]]
            lhs = delta_first(self.f, [x1, x2], combined)
            rhs = a * delta_first(self.f, [x1, x2], h) + b * delta_first(self.f, [x1, x2], k)
            assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_zeroth_order_identity(self, rng):
        for x1, x2 in bidisk_points(rng, 200, radius=0.9):
            value = closed_form_5_2(x1, x2)
            expansion = x1 * delta_first(self.f, [x1, x2], [1, 0]) + x2 * delta_first(self.f, [x1, x2], [0, 1])
            assert abs(value - expansion) <= 1e-12

    def test_base_point_outside_the_ball(self):
        with pytest.raises(OutsideBallError):
            delta_first(self.f, [1.0, 0.5], [1, 0])

    def test_wrong_lengths(self):
        with pytest.raises(DimensionMismatchError):
            delta_first(self.f, [0.1, 0.1, 0.1], [1, 0])

    def test_polynomial_first_difference(self):
        # Delta(z1 z2)(0, x)[h] = h1 x2
        P = parse("z1*z2", 2)
        assert delta_first(P, [0.3, 0.7], [2, 5]) == pytest.approx(1.4)

    @pytest.mark.parametrize(
        "f",
        [example_5_2(), parse("2 - z1 + 3*z2*z1 + (0.5+1i)*z1*z1*z2 - 4*z2", 2)],
        ids=["ex52", "polynomial"],
    )
    @pytest.mark.parametrize("j", [1, 2])
    def test_agrees_with_finite_difference(self, f, j):
        tau = 1e-5
        direction = [1 if k == j else 0 for k in (1, 2)]
        step = [tau * e for e in direction]
        quotient = (evaluate_scalar(f, from_scalars(step)) - evaluate_scalar(f, from_scalars([0, 0]))) / tau
        assert abs(delta_first(f, [0, 0], direction) - quotient) <= 1e-3


class TestDeltaFirstFunction:
    def test_matches_remainder_factor(self, rng):
        f = example_5_2()
        for j in (1, 2):
            delta = DeltaFirstFunction(f, j)
            factor = remainder_factor(f, Word((j,), 2))
            for n in (1, 2, 3):
                X = sample_in_ball(polydisk(2), n, 0.1, rng)
                assert op_norm(delta.evaluate(X) - factor.evaluate(X)) <= 1e-10

    @pytest.mark.acceptance
    @pytest.mark.parametrize("epsilon", [0.1, 0.01, 0.001])
    def test_blowup_along_builtin_path(self, epsilon):
        value = evaluate_scalar(DeltaFirstFunction(example_5_2(), 1), builtin_path(epsilon))
        expected = np.sqrt(0.25 + 0.25 / epsilon**2)
        assert abs(value) == pytest.approx(expected, rel=0.01)
        assert value == pytest.approx(0.5 + 0.5j / epsilon, rel=1e-6)

    def test_value_near_the_boundary_is_large(self):
        assert abs(evaluate_scalar(DeltaFirstFunction(example_5_2(), 1), builtin_path(0.001))) >= 400

    def test_direction_index(self):
        with pytest.raises(ValidationError):
            DeltaFirstFunction(example_5_2(), 3)


class TestScalarQuotients:
    P = parse("z1^3", 1)

    def test_separated_points(self):
        x, y = 0.5, -0.25j
        assert d1_difference_quotient(self.P, x, y) == pytest.approx(x * x + x * y + y * y, abs=1e-14)

    def test_coincident_points_use_the_derivative(self):
        assert d1_difference_quotient(self.P, 0.4, 0.4) == pytest.approx(3 * 0.16, abs=1e-14)

    @pytest.mark.parametrize("x, y", [(0.5, 0.2), (0.5j, -0.1), (0.3, 0.301), (-0.6 + 0.2j, 0.1j)])
    def test_matches_the_block_entry(self, x, y):
        P = parse("z1^2 - 3*z1 + 2", 1)
        block = block_upper_triangular(from_scalars([x]), from_scalars([1]), from_scalars([y]))
        entry = upper_right_block(evaluate(P, block), 1)[0, 0]
        quotient = d1_difference_quotient(P, x, y)
        assert abs(quotient - entry) <= 1e-9
        assert quotient == pytest.approx(x + y - 3, abs=1e-9)

    @pytest.mark.parametrize("x, y", [(0.2, -0.7j), (0.4, 0.4)])
    def test_linear_and_constant_functions(self, x, y):
        assert d1_difference_quotient(parse("z1", 1), x, y) == pytest.approx(1, abs=1e-14)
        assert d1_difference_quotient(parse("5", 1), x, y) == 0

    def test_requires_one_variable(self):
        with pytest.raises(DimensionMismatchError):
            d1_difference_quotient(example_5_2(), 0.1, 0.2)


class TestGleasonSplit:
    @pytest.mark.acceptance
    def test_split_reconstructs_the_function(self, rng):
        f = example_5_2()
        for x1, x2 in bidisk_points(rng):
            g1, g2 = gleason_split(f, [x1, x2])
            value = evaluate_scalar(f, from_scalars([x1, x2]))
            assert abs(value - (g1 * x1 + g2 * x2)) <= 1e-12
            assert abs(g1) <= 1 + 1e-12

    def test_product_of_coordinates(self):
        x1 = 0.3 + 0.1j
        g1, g2 = gleason_split(parse("z1*z2", 2), [x1, -0.4])
        assert g1 == 0
        assert g2 == pytest.approx(x1, abs=1e-14)

    @pytest.mark.parametrize("x", [[0.3, -0.4j], [0, 0.5], [0.5, 0], [0, 0]])
    def test_constant_splits_to_zero(self, x):
        assert gleason_split(parse("0.7-2i", 2), x) == (0, 0)

    def test_split_reconstructs_a_polynomial(self, rng):
        P = parse("2 - z1 + 3*z2*z1 + (0.5+1i)*z1*z1*z2 - 4*z2^3", 2)
        at_origin = evaluate_scalar(P, from_scalars([0, 0]))
        points = bidisk_points(rng, 300) + [(0, 0.6j), (-0.7, 0), (0, 0)]
        for x1, x2 in points:
            g1, g2 = gleason_split(P, [x1, x2])
            value = evaluate_scalar(P, from_scalars([x1, x2]))
            assert abs(value - at_origin - (g1 * x1 + g2 * x2)) <= 1e-12

    def test_first_factor_closed_form(self):
        g1, _ = gleason_split(example_5_2(), [0.5j, -0.3])
        assert g1 == pytest.approx(1 / (2 - 0.5j), abs=1e-14)

    def test_axes_use_block_derivative(self):
        g1, g2 = gleason_split(example_5_2(), [0, 0])
        assert g1 == pytest.approx(0.5, abs=1e-14)
        assert g2 == pytest.approx(0.5, abs=1e-14)

    def test_outside_bidisk(self):
        with pytest.raises(OutsideBallError):
            gleason_split(example_5_2(), [1.0, 0])
