import allure
import pytest

from cli.main import main

HALF = "data/test_data/points/scalar_half.json"
COMMUTING = "data/test_data/points/scalar_commuting.json"


@pytest.mark.cli
class TestCommands:
    @pytest.mark.smoke
    def test_eval_realization(self, run_cli):
        result = run_cli("eval", "--realization", "ex52", "--point", HALF)
        assert result.code == 0
        assert result.comment == "# seed=none version=0.1.0 command=eval"
        assert result.header == ["row", "col", "re", "im"]
        assert float(result.rows[0]["re"]) == pytest.approx(0.5, abs=1e-14)

    def test_eval_polynomial_at_matrix_point(self, run_cli):
        result = run_cli("eval", "--poly", "z1*z2 - z2*z1", "--point", "data/test_data/points/nilpotent_level2.json")
        assert result.code == 0
        assert len(result.rows) == 4
        assert all(float(row["re"]) == 0 for row in result.rows)

    def test_coefficient_of_a_word(self, run_cli):
        result = run_cli("coeff", "--realization", "ex52", "--word", "12")
        assert result.code == 0
        assert result.rows[0]["word"] == "12"
        assert float(result.rows[0]["re"]) == pytest.approx(-0.25, abs=1e-12)

    def test_coefficients_up_to_order(self, run_cli):
        result = run_cli("coeff", "--realization", "ex52", "-N", "2")
        assert [row["word"] for row in result.rows] == ["", "1", "2", "11", "12", "21", "22"]

    def test_polynomial_coefficients(self, run_cli):
        result = run_cli("coeff", "--poly", "2*z1*z2 - z1 - z2", "-d", "2")
        assert [(row["word"], float(row["re"])) for row in result.rows] == [("1", -1), ("2", -1), ("12", 2)]

    def test_delta_at_scalar_point(self, run_cli):
        result = run_cli("delta", "--realization", "ex52", "--point", HALF)
        assert result.code == 0
        # (x2 - 1) / (x1 + x2 - 2) at (1/2, 1/2)
        assert float(result.rows[0]["re"]) == pytest.approx(0.5, abs=1e-12)

    def test_delta_with_direction(self, run_cli):
        result = run_cli("delta", "--realization", "ex52", "--x", "0.5,0.5", "--direction", "0,1")
        assert float(result.rows[0]["modulus"]) == pytest.approx(0.5, abs=1e-12)

    def test_tt_check(self, run_cli):
        result = run_cli("tt-check", "--realization", "ex52", "--point", COMMUTING, "-N", "2")
        assert result.code == 0
        assert result.rows[0]["passed"] == "true"

    def test_probe(self, run_cli):
        result = run_cli("probe", "--realization", "ex52", "--budget", "60", "--seed", "3")
        assert result.code == 0
        assert result.comment == "# seed=3 version=0.1.0 command=probe"
        assert result.header == ["iteration", "sample", "value", "boundary_distance", "seed"]
        values = [float(row["value"]) for row in result.rows]
        assert values == sorted(values)
        assert values[-1] <= 1 + 1e-6

    def test_regularity(self, run_cli):
        result = run_cli("probe", "--realization", "ex52", "-N", "1", "--budget", "40")
        assert result.code == 0
        assert [row["factor"] for row in result.rows] == ["row", "column"]
        assert result.rows[1]["nonconvergent"] == "true"

    def test_blowup(self, run_cli):
        result = run_cli("blowup", "--target", "delta1:ex52", "--eps", "0.1,0.01,0.001")
        assert result.code == 0
        moduli = [float(row["modulus"]) for row in result.rows]
        assert moduli == sorted(moduli)
        assert moduli[-1] >= 400

    @pytest.mark.parametrize("case, verdict", [("half", "interior"), ("identity", "interior"), ("boundary", "boundary")])
    def test_dichotomy_cases(self, run_cli, case, verdict):
        result = run_cli("dichotomy", "--case", case, "--samples", "20")
        assert result.code == 0
        assert {row["verdict"] for row in result.rows} == {verdict}

    def test_variety(self, run_cli):
        result = run_cli("variety", "--variety", "data/test_data/varieties/curve_square.json", "--point", HALF)
        assert result.code == 0
        assert result.rows[0]["member"] == "false"
        assert float(result.rows[0]["residual"]) == pytest.approx(0.25)

    @pytest.mark.parametrize("name", ["ex52", "ex53", "ex412", "gleason"])
    def test_reproduce(self, run_cli, name):
        result = run_cli("reproduce", name, "--samples", "5")
        allure.attach(result.out, name=f"{name}.csv", attachment_type=allure.attachment_type.CSV)
        assert result.code == 0
        assert result.rows

    def test_output_file(self, run_cli, tmp_path):
        target = tmp_path / "nested" / "eval.csv"
        result = run_cli("eval", "--realization", "ex52", "--point", HALF, "--out", str(target))
        assert result.code == 0
        assert result.out == ""
        assert target.read_text(encoding="utf-8").startswith("# seed=none")


@pytest.mark.cli
class TestExitCodes:
    def test_missing_subcommand(self, run_cli):
        assert run_cli().code == 2

    def test_unknown_option(self, run_cli):
        assert run_cli("eval", "--realization", "ex52", "--point", HALF, "--bogus").code == 2

    def test_conflicting_functions(self, run_cli):
        assert run_cli("eval", "--realization", "ex52", "--poly", "z1", "--point", HALF).code == 2

    def test_polynomial_needs_dimension(self, run_cli):
        result = run_cli("coeff", "--poly", "z1")
        assert result.code == 2
        assert "--dim" in result.err

    def test_unknown_ball(self, run_cli):
        result = run_cli("probe", "--realization", "ex52", "--ball", "sphere:2")
        assert result.code == 2
        assert "sphere:2" in result.err

    @pytest.mark.parametrize(
        "argv",
        [
            ("probe", "--realization", "ex52", "--level", "0"),
            ("probe", "--realization", "ex52", "--budget", "0"),
            ("dichotomy", "--case", "identity", "--samples", "0"),
        ],
    )
    def test_counts_must_be_positive(self, run_cli, argv):
        result = run_cli(*argv)
        assert result.code == 2
        assert "must be at least 1" in result.err

    def test_malformed_point(self, run_cli):
        assert run_cli("eval", "--realization", "ex52", "--point", "data/test_data/points/malformed.json").code == 2

    def test_missing_file(self, run_cli):
        assert run_cli("eval", "--realization", "ex52", "--point", "data/test_data/points/absent.json").code == 2

    def test_unparsable_expression(self, run_cli):
        assert run_cli("eval", "--poly", "z1 +", "--point", HALF).code == 2

    def test_point_outside_the_ball(self, run_cli):
        result = run_cli("delta", "--realization", "ex52", "--x", "1.0,0.5")
        assert result.code == 1
        assert "not strictly inside" in result.err

    def test_expansive_realization(self, run_cli):
        result = run_cli("eval", "--realization", "data/test_data/realizations/expansive.json", "--point", HALF)
        assert result.code == 1
        assert "exceeds 1" in result.err


@pytest.mark.cli
@pytest.mark.acceptance
class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("probe", "--realization", "ex52", "--budget", "80", "--level", "2", "--seed", "11"),
            ("probe", "--poly", "z1*z2", "-d", "2", "--ball", "row:2", "--budget", "40", "-N", "1"),
            ("dichotomy", "--case", "identity", "--samples", "15", "--seed", "4"),
            ("reproduce", "ex52", "--samples", "8", "--seed", "5"),
        ],
    )
    def test_same_seed_same_bytes(self, argv, tmp_path):
        first, second = tmp_path / "first.csv", tmp_path / "second.csv"
        assert main([*argv, "--out", str(first)]) == 0
        assert main([*argv, "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()
