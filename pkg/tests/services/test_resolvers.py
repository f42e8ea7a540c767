import pytest

from core.ball.ball import row_ball
from core.ball.pencil import diagonal_pencil
from core.errors import ShorthandError
from core.matrix.matrix_tuple import from_scalars
from core.ncdiff.difference import DeltaFirstFunction
from core.probe.scans import builtin_path
from core.realization.realization import Realization, ResolventTerm
from services.builtins.resolvers import resolve_ball, resolve_path, resolve_point, resolve_realization, resolve_target


class TestResolvers:
    @pytest.mark.parametrize("text, d", [("row:3", 3), ("polydisk:2", 2), ("column:4", 4)])
    def test_standard_balls(self, text, d):
        ball = resolve_ball(text)
        assert ball.d == d
        assert str(ball) == text

    def test_pencil_file_ball(self):
        ball = resolve_ball("pencil:data/test_data/pencils/row2.json")
        assert ball.pencil == row_ball(2).pencil
        assert ball.norm_at(from_scalars([0.6, 0.8])) == pytest.approx(1)

    @pytest.mark.parametrize("text", ["row", "row:0", "row:two", "sphere:2", "pencil:"])
    def test_bad_ball(self, text):
        with pytest.raises(ShorthandError):
            resolve_ball(text)

    def test_builtin_realization(self):
        f = resolve_realization("ex52")
        assert isinstance(f, Realization)
        assert f.pencil == diagonal_pencil(2)

    def test_targets(self):
        assert isinstance(resolve_target("resolvent:ex52"), ResolventTerm)
        delta = resolve_target("delta2:ex52")
        assert isinstance(delta, DeltaFirstFunction) and delta.j == 2
        assert isinstance(resolve_target("ex52"), Realization)

    def test_delta_target_needs_index(self):
        with pytest.raises(ShorthandError):
            resolve_target("deltaJ:ex52")

    def test_paths(self):
        assert resolve_path("builtin") is builtin_path
        with pytest.raises(ShorthandError):
            resolve_path("spiral")

    def test_missing_point_file(self):
        with pytest.raises(FileNotFoundError):
            resolve_point("data/test_data/points/absent.json")
