"""Resolution of the shorthand strings accepted by the command line."""

import logging
from typing import Optional

from constants.builtins import (
    BALL_COLUMN,
    BALL_PENCIL,
    BALL_POLYDISK,
    BALL_ROW,
    PATH_BUILTIN,
    REALIZATION_EX52,
    TARGET_DELTA_PREFIX,
    TARGET_RESOLVENT,
)
from core.ball.ball import OperatorBall, column_ball, polydisk, row_ball
from core.errors import ShorthandError
from core.matrix.matrix_tuple import MatrixTuple
from core.ncdiff.difference import DeltaFirstFunction
from core.ncdiff.evaluable import EvaluableNcFunction
from core.probe.scans import Path, builtin_path
from core.realization.examples import example_5_2
from core.realization.realization import Realization, ResolventTerm
from core.utils.file import FileUtils
from core.utils.json import JsonUtils
from core.varieties.variety import AlgebraicVariety
from services.models.pencil_model import PencilModel
from services.models.point_model import PointModel
from services.models.realization_model import RealizationModel
from services.models.variety_model import VarietyModel

logger = logging.getLogger(__name__)

_STANDARD_BALLS = {BALL_ROW: row_ball, BALL_POLYDISK: polydisk, BALL_COLUMN: column_ball}


def _split(text: str) -> tuple[str, Optional[str]]:
    head, sep, tail = text.partition(":")
    return head.strip(), (tail.strip() if sep else None)


def resolve_ball(text: str) -> OperatorBall:
    """'row:d', 'polydisk:d', 'column:d' or 'pencil:FILE'."""
    kind, argument = _split(text)
    if kind in _STANDARD_BALLS:
        if argument is None or not argument.isdigit() or int(argument) < 1:
            raise ShorthandError(f"Ball '{text}' needs a positive dimension, e.g. '{kind}:2'")
        return _STANDARD_BALLS[kind](int(argument))
    if kind == BALL_PENCIL and argument:
        model = read_model(argument, PencilModel)
        return OperatorBall(model.to_core(), name=text)
    raise ShorthandError(f"Unknown ball '{text}'; expected row:d, polydisk:d, column:d or pencil:FILE")


def resolve_realization(text: str) -> Realization:
    """The builtin 'ex52' or a realization JSON file."""
    if text == REALIZATION_EX52:
        return example_5_2()
    return read_model(text, RealizationModel).to_core()


def resolve_target(text: str) -> EvaluableNcFunction:
    """A realization, 'deltaJ:R' (X -> Delta_J R(0, X)) or 'resolvent:R'."""
    kind, argument = _split(text)
    if argument is not None and kind == TARGET_RESOLVENT:
        return ResolventTerm(resolve_realization(argument))
    if argument is not None and kind.startswith(TARGET_DELTA_PREFIX):
        index = kind[len(TARGET_DELTA_PREFIX):]
        if not index.isdigit():
            raise ShorthandError(f"Target '{text}' needs a direction index, e.g. 'delta1:ex52'")
        return DeltaFirstFunction(resolve_realization(argument), int(index))
    return resolve_realization(text)


def resolve_path(text: str) -> Path:
    if text == PATH_BUILTIN:
        return builtin_path
    raise ShorthandError(f"Unknown path '{text}'; only '{PATH_BUILTIN}' is available")


def resolve_point(path: str) -> MatrixTuple:
    return read_model(path, PointModel).to_core()


def resolve_variety(path: str) -> AlgebraicVariety:
    model = read_model(path, VarietyModel)
    return model.to_core(resolve_ball(model.ball))


def read_model(path: str, model_class):
    resolved = FileUtils.resolve_input_path(path)
    logger.debug("Reading %s from %s", model_class.__name__, resolved)
    return JsonUtils.read_json_file_as_model(resolved, model_class)
