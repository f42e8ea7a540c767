import numpy as np
import pytest

from core.algebra.parser import parse
from core.algebra.polynomial import FreePolynomial
from core.algebra.word import Word
from core.ball.ball import polydisk, row_ball
from core.errors import BudgetExceededError, DimensionMismatchError, ValidationError
from core.matrix.linalg import op_norm
from core.probe.regularity import RemainderColumn, WordRow, regularity_factors
from core.probe.sampling import sample_in_ball
from core.realization.examples import example_5_2
from core.realization.realization import remainder_factor


class TestFactors:
    def test_word_row_is_contractive_on_row_ball(self, rng):
        row = WordRow(2, 3)
        for n in (1, 2, 3):
            X = sample_in_ball(row_ball(2), n, 0.001, rng)
            value = row.evaluate(X)
            assert value.shape == (n, 8 * n)
            assert op_norm(value) <= 1

    def test_polynomial_column_stacks_quotients(self, rng):
        column = RemainderColumn(parse("z1*z2 + 3*z2*z2*z1", 2), 2)
        X = sample_in_ball(polydisk(2), 2, 0.1, rng)
        value = column.evaluate(X)
        assert value.shape == (8, 2)
        assert np.array_equal(value[2:4], np.eye(2))
        assert np.allclose(value[6:8], 3 * X[1])
        assert not value[:2].any() and not value[4:6].any()

    def test_realization_column_stacks_remainder_factors(self, rng):
        f = example_5_2()
        column = RemainderColumn(f, 2)
        X = sample_in_ball(polydisk(2), 2, 0.1, rng)
        value = column.evaluate(X)
        for index, digits in enumerate(("11", "12", "21", "22")):
            factor = remainder_factor(f, Word.from_digits(digits, 2)).evaluate(X)
            assert op_norm(value[2 * index : 2 * index + 2] - factor) <= 1e-12


class TestRegularity:
    def test_row_factor_on_row_ball(self):
        report = regularity_factors(parse("z1*z2 + z2*z2*z1", 2), 2, row_ball(2), n=2, budget=60, seed=1)
        assert report.row_factor <= 1 + 1e-6
        assert 1 - 1e-9 <= report.column_factor <= 2 ** 0.5 + 1e-9

    def test_zero_polynomial(self):
        report = regularity_factors(FreePolynomial.zero(2), 1, polydisk(2), n=1, budget=20, seed=0)
        assert report.column_factor == 0
        assert not report.nonconvergent

    def test_bounded_function_with_unbounded_remainders(self):
        report = regularity_factors(example_5_2(), 1, polydisk(2), n=1, budget=40, seed=0)
        assert report.column_factor >= 10
        assert report.nonconvergent

    def test_order_must_be_positive(self):
        with pytest.raises(ValidationError):
            regularity_factors(example_5_2(), 0, polydisk(2), n=1, budget=10, seed=0)

    def test_word_budget(self):
        with pytest.raises(BudgetExceededError):
            regularity_factors(example_5_2(), 14, polydisk(2), n=1, budget=10, seed=0)

    def test_ball_dimension(self):
        with pytest.raises(DimensionMismatchError):
            regularity_factors(example_5_2(), 1, polydisk(3), n=1, budget=10, seed=0)
