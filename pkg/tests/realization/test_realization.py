import allure
import numpy as np
import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from core.algebra.polynomial import cesaro_sum
from core.algebra.word import Word, words
from core.ball.ball import OperatorBall, polydisk
from core.ball.pencil import diagonal_pencil, unit_row_pencil
from core.errors import DimensionMismatchError, IllConditionedError, ValidationError
from core.matrix.linalg import condition_number, op_norm
from core.matrix.matrix_tuple import MatrixTuple, direct_sum, eval_poly, from_scalars, similarity
from core.probe.sampling import random_invertible, sample_in_ball, uniform_disk
from core.probe.search import estimate_sup
from core.realization.examples import (
    closed_form_5_2,
    closed_form_resolvent_5_2,
    constant_realization,
    example_5_2,
)
from core.realization.realization import (
    RealizationMode,
    cesaro_eval,
    homogeneous_values,
    make_realization,
    power_series_coefficient,
    power_series_coefficients,
    resolvent_term,
    to_polynomial,
)
from core.utils.json import JsonUtils
from services.models.point_model import PointModel
from services.models.realization_model import RealizationModel
from tests.realization.strategies import realizations


def bidisk_points(rng, count: int = 1000, radius: float = 0.99) -> list[tuple[complex, complex]]:
    return list(zip(uniform_disk(rng, count, radius), uniform_disk(rng, count, radius)))


def shift_point(w: Word) -> MatrixTuple:
    """Nilpotent tuple whose only nonzero word of length |w| at entry (0, |w|) is w."""
    k = len(w)
    matrices = [np.zeros((k + 1, k + 1), dtype=complex) for _ in range(w.d)]
    for i, letter in enumerate(w.letters):
        matrices[letter - 1][i, i + 1] = 1
    return MatrixTuple(tuple(matrices))


class TestExample52:
    @pytest.fixture(autouse=True)
    def setup(self):
        self.f = example_5_2()

    @pytest.mark.smoke
    def test_value_at_half(self):
        assert self.f.evaluate(from_scalars([0.5, 0.5]))[0, 0] == pytest.approx(0.5, abs=1e-14)

    @pytest.mark.acceptance
    def test_closed_form(self, rng):
        errors = [
            abs(self.f.evaluate(from_scalars([x1, x2]))[0, 0] - closed_form_5_2(x1, x2))
            for x1, x2 in bidisk_points(rng)
        ]
        allure.attach(f"{max(errors):.3e}", name="max abs error")
        assert max(errors) <= 1e-10

    @pytest.mark.acceptance
    def test_resolvent_closed_form(self, rng):
        for x1, x2 in bidisk_points(rng):
            value = resolvent_term(self.f, from_scalars([x1, x2]))
            assert value.shape == (2, 1)
            assert np.max(np.abs(value - closed_form_resolvent_5_2(x1, x2))) <= 1e-10

    def test_resolvent_on_the_diagonal(self):
        # on x1 = x2 = t the resolvent is constant sqrt(2) * (1/2, 1/2)
        for t in (0.0, 0.5, 0.99, -0.3 + 0.4j):
            value = resolvent_term(self.f, from_scalars([t, t]))
            assert np.allclose(value.ravel(), [np.sqrt(0.5), np.sqrt(0.5)], atol=1e-12)

    def test_file_realization_matches_builtin(self):
        g = JsonUtils.read_json_file_as_model("data/test_data/realizations/ex52.json", RealizationModel).to_core()
        assert g.mode is RealizationMode.ISOMETRY
        X = from_scalars([0.3 - 0.2j, -0.1 + 0.6j])
        assert g.evaluate(X)[0, 0] == pytest.approx(self.f.evaluate(X)[0, 0], abs=1e-15)

    def test_nilpotent_point(self):
        X = JsonUtils.read_json_file_as_model("data/test_data/points/nilpotent_level2.json", PointModel).to_core()
        assert np.allclose(self.f.evaluate(X), [[0, 0.3], [0, 0]], atol=1e-15)

    def test_singular_resolvent_is_reported(self):
        with pytest.raises(IllConditionedError):
            self.f.evaluate(from_scalars([1, 1]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            self.f.evaluate(from_scalars([0.1, 0.1, 0.1]))


class TestContractivity:
    @pytest.mark.acceptance
    def test_values_are_contractive(self, rng):
        f, ball = example_5_2(), polydisk(2)
        for index in range(500):
            n = index % 4 + 1
            X = sample_in_ball(ball, n, (0.5, 0.1, 0.01, 0.001)[index % 4], rng)
            assert op_norm(f.evaluate(X)) <= 1 + 1e-8

    @pytest.mark.acceptance
    def test_sup_estimate(self):
        report = estimate_sup(example_5_2(), polydisk(2), n=1, budget=2000, seed=7, target="ex52")
        allure.attach(f"{report.best_value:.17g}", name="sup estimate")
        assert 0.95 <= report.best_value <= 1 + 1e-6


class TestCoefficients:
    @pytest.mark.acceptance
    def test_low_degree_coefficients(self):
        f = example_5_2()
        expected = {"": 0, "1": 0.5, "2": 0.5, "11": 0.25, "22": 0.25, "12": -0.25, "21": -0.25}
        for digits, value in expected.items():
            assert power_series_coefficient(f, Word.from_digits(digits, 2)) == pytest.approx(value, abs=1e-12)

    @pytest.mark.acceptance
    def test_coefficients_match_nilpotent_evaluation(self):
        f = example_5_2()
        for k in range(1, 5):
            for w in words(2, k):
                oracle = f.evaluate(shift_point(w))[0, k]
                assert abs(power_series_coefficient(f, w) - oracle) <= 1e-12

    def test_batch_agrees_with_single(self):
        f = example_5_2()
        batch = power_series_coefficients(f, 4)
        assert len(batch) == 1 + 2 + 4 + 8 + 16
        for w, c in batch.items():
            assert c == pytest.approx(power_series_coefficient(f, w), abs=1e-15)

    def test_truncation_tail_bound(self, rng):
        f = example_5_2()
        for K in (5, 10, 20):
            P = to_polynomial(f, K) if K <= 10 else None
            for x1, x2 in bidisk_points(rng, 20, radius=0.5):
                X = from_scalars([x1, x2])
                r = max(abs(x1), abs(x2))
                partial = sum(homogeneous_values(f, X, K + 1))
                error = abs(f.evaluate(X)[0, 0] - partial[0, 0])
                assert error <= r ** (K + 1) / (1 - r) + 1e-14
                if P is not None:
                    assert eval_poly(P, X)[0, 0] == pytest.approx(partial[0, 0], abs=1e-12)

    def test_constant_realization(self):
        g = constant_realization(0.25j)
        assert power_series_coefficient(g, Word.unit(2)) == 0.25j
        assert power_series_coefficient(g, Word.from_digits("12", 2)) == 0
        assert np.array_equal(g.evaluate(from_scalars([0.3, 0.3])), [[0.25j]])


class TestValidation:
    def test_expansive_transfer_matrix(self):
        with pytest.raises(ValidationError, match="exceeds 1"):
            JsonUtils.read_json_file_as_model("data/test_data/realizations/expansive.json", RealizationModel).to_core()

    def test_shapes(self):
        with pytest.raises(ValidationError, match="B must have length"):
            make_realization(diagonal_pencil(2), 1, 0, [1], [0, 0], np.zeros((2, 2)))
        with pytest.raises(ValidationError, match="D must have shape"):
            make_realization(unit_row_pencil(2), 1, 0, [0], [0, 0], np.zeros((2, 2)))

    def test_isometry_mode_requires_isometry(self):
        with pytest.raises(ValidationError, match="isometry"):
            make_realization(diagonal_pencil(2), 1, 0, [0.5, 0.5], [0.5, 0.5], np.zeros((2, 2)), mode="isometry")

    def test_rectangular_pencil(self):
        # row ball, m = 1: f(X) = B L(X) (1 - D L(X))^{-1} C with L(X) = [X_1 X_2]
        g = make_realization(unit_row_pencil(2), 1, 0, [1.0], [0.6, 0.8], [[0.0], [0.0]])
        assert g.evaluate(from_scalars([0.5, 0.25]))[0, 0] == pytest.approx(0.5, abs=1e-15)
        assert power_series_coefficient(g, Word.from_digits("2", 2)) == pytest.approx(0.8)


class TestNcAxioms:
    @pytest.mark.acceptance
    def test_direct_sum(self, rng):
        f, ball = example_5_2(), polydisk(2)
        for _ in range(200):
            X, Y = sample_in_ball(ball, 2, 0.1, rng), sample_in_ball(ball, 3, 0.1, rng)
            value = f.evaluate(direct_sum(X, Y))
            assert np.all(value[:2, 2:] == 0) and np.all(value[2:, :2] == 0)
            assert op_norm(value[:2, :2] - f.evaluate(X)) <= 1e-12
            assert op_norm(value[2:, 2:] - f.evaluate(Y)) <= 1e-12

    @pytest.mark.acceptance
    def test_similarity(self, rng):
        f, ball = example_5_2(), polydisk(2)
        for _ in range(200):
            X = sample_in_ball(ball, 3, 0.1, rng)
            S = random_invertible(3, rng, spread=0.3)
            Y = similarity(S, X)
            lhs = f.evaluate(Y)
            rhs = np.linalg.solve(S, f.evaluate(X) @ S)
            assert op_norm(lhs - rhs) <= 1e-10 * condition_number(S)


class TestRandomRealizations:
    @pytest.mark.property
    @seed(3101)
    @settings(max_examples=30, deadline=None)
    @given(realizations(), st.integers(0, 2**32 - 1))
    def test_nc_axioms(self, f, state):
        rng = np.random.default_rng(state)
        ball = OperatorBall(f.pencil)
        assert op_norm(f.D) > 0
        X, Y = sample_in_ball(ball, 2, 0.1, rng), sample_in_ball(ball, 3, 0.1, rng)
        value = f.evaluate(direct_sum(X, Y))
        assert np.all(value[:2, 2:] == 0) and np.all(value[2:, :2] == 0)
        assert op_norm(value[:2, :2] - f.evaluate(X)) <= 1e-12
        assert op_norm(value[2:, 2:] - f.evaluate(Y)) <= 1e-12
        S = random_invertible(3, rng, spread=0.3)
        rhs = np.linalg.solve(S, f.evaluate(Y) @ S)
        assert op_norm(f.evaluate(similarity(S, Y)) - rhs) <= 1e-10 * condition_number(S)

    @pytest.mark.property
    @seed(3102)
    @settings(max_examples=30, deadline=None)
    @given(realizations(), st.integers(0, 2**32 - 1))
    def test_values_are_contractive(self, f, state):
        rng = np.random.default_rng(state)
        for n in (1, 2, 3):
            X = sample_in_ball(OperatorBall(f.pencil), n, 0.01, rng)
            assert op_norm(f.evaluate(X)) <= 1 + 1e-8

    @pytest.mark.property
    @seed(3103)
    @settings(max_examples=20, deadline=None)
    @given(realizations())
    def test_coefficients_match_nilpotent_evaluation(self, f):
        assert power_series_coefficient(f, Word.unit(2)) == f.A
        for k in range(1, 4):
            for w in words(2, k):
                oracle = f.evaluate(shift_point(w))[0, k]
                assert abs(power_series_coefficient(f, w) - oracle) <= 1e-10


class TestCesaro:
    def test_mean_of_partial_sums(self, rng):
        f = example_5_2()
        for x1, x2 in bidisk_points(rng, 50, radius=0.5):
            X = from_scalars([x1, x2])
            parts = [value[0, 0] for value in homogeneous_values(f, X, 30)]
            partial_sums = np.cumsum(parts)
            assert cesaro_eval(f, X, 30)[0, 0] == pytest.approx(np.mean(partial_sums), abs=1e-13)

    @pytest.mark.acceptance
    def test_third_cesaro_sum_coefficients(self):
        # weights 1, 2/3, 1/3 on the homogeneous parts of size 0, 1, 2
        P = cesaro_sum(example_5_2(), 3)
        expected = {"": 0, "1": 1 / 3, "2": 1 / 3, "11": 1 / 12, "12": -1 / 12, "21": -1 / 12, "22": 1 / 12}
        assert P.degree == 2
        for digits, value in expected.items():
            assert P.coefficient(Word.from_digits(digits, 2)) == pytest.approx(value, abs=1e-12)

    def test_agrees_with_polynomial_cesaro_sum(self, rng):
        f = example_5_2()
        P = cesaro_sum(f, 5)
        for x1, x2 in bidisk_points(rng, 20, radius=0.9):
            X = from_scalars([x1, x2])
            assert eval_poly(P, X)[0, 0] == pytest.approx(cesaro_eval(f, X, 5)[0, 0], abs=1e-13)

    @pytest.mark.acceptance
    def test_partial_sums_converge(self, rng):
        f = example_5_2()
        for x1, x2 in bidisk_points(rng, 200, radius=0.5):
            X = from_scalars([x1, x2])
            partial = sum(homogeneous_values(f, X, 60))[0, 0]
            assert abs(partial - f.evaluate(X)[0, 0]) <= 1e-6

    @pytest.mark.property
    @seed(5202)
    @settings(max_examples=100, deadline=None)
    @given(
        st.complex_numbers(max_magnitude=0.5),
        st.complex_numbers(max_magnitude=0.5),
        st.integers(min_value=1, max_value=80),
    )
    def test_geometric_error_bound(self, x1, x2, N):
        f = example_5_2()
        X = from_scalars([x1, x2])
        r = max(abs(x1), abs(x2))
        bound = r / ((1 - r) ** 2 * N) + r**N / (1 - r)
        assert abs(cesaro_eval(f, X, N)[0, 0] - f.evaluate(X)[0, 0]) <= bound + 1e-12

    def test_order_must_be_positive(self):
        with pytest.raises(ValidationError):
            cesaro_eval(example_5_2(), from_scalars([0, 0]), 0)
