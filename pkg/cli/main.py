"""Command-line front end: ``python -m cli <subcommand> [options]``.

Exit codes: 0 on success, 1 when the library raises an NcError (printed
verbatim), 2 on usage errors, malformed input files and unparsable
expressions.
"""

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

import pydantic

from configs.configs import Configs
from constants.builtins import REPRODUCE_TARGETS
from core.algebra.parser import parse, parse_word
from core.algebra.polynomial import FreePolynomial
from core.ball.ball import OperatorBall
from core.errors import ExpressionSyntaxError, NcError, ShorthandError
from core.ncdiff.evaluable import ball_pencil_of
from core.utils.csv import CsvUtils
from services.builtins.resolvers import (
    resolve_ball,
    resolve_path,
    resolve_point,
    resolve_realization,
    resolve_target,
    resolve_variety,
)
from services.controllers.base_controller import CsvTable
from services.controllers.evaluation_controller import EvaluationController
from services.controllers.probe_controller import ProbeController
from services.controllers.reproduce_controller import ReproduceController
from services.controllers.variety_controller import VarietyController

logger = logging.getLogger(__name__)

DICHOTOMY_CASES = {
    "half": ["0.5*z1", "0.5*z2"],
    "identity": ["z1", "z2"],
    "boundary": ["1", "0"],
}


class UsageError(Exception):
    """Invalid combination of command-line options."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(part.strip().replace(" ", "")) for part in text.split(",")]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of complex numbers: {text!r}") from error


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from error
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as error:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from error


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    parser.add_argument("--seed", type=int, default=None, help="Random seed (default: DEFAULT_SEED)")


def _add_function(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--poly", help="Free polynomial, e.g. 'z1*z2 - z2*z1'")
    group.add_argument("--realization", help="'ex52' or a realization JSON file")
    group.add_argument("--target", help="Realization, 'deltaJ:R' or 'resolvent:R'")
    parser.add_argument("-d", "--dim", type=int, default=None, help="Dimension d for --poly")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="python -m cli", description="Bounded nc functions on operator balls")
    parser.add_argument("--version", action="version", version=Configs().VERSION)
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="Evaluate a function at a point")
    _add_function(p)
    p.add_argument("--point", required=True, help="Point JSON file")
    _add_common(p)

    p = sub.add_parser("coeff", help="Power series coefficients")
    _add_function(p)
    p.add_argument("--word", help="A single word, e.g. '12' or 'z1*z2'")
    p.add_argument("-N", "--order", type=int, default=None, help="All words up to this size")
    _add_common(p)

    p = sub.add_parser("delta", help="Delta f(0, x)[h] at a scalar point")
    _add_function(p)
    p.add_argument("--point", help="Level-1 point JSON file")
    p.add_argument("--x", type=_complex_list, help="Scalar base point, e.g. '0.5,0.1+0.2j'")
    p.add_argument("--direction", type=_complex_list, default=None, help="Direction h (default e_1)")
    _add_common(p)

    p = sub.add_parser("tt-check", help="Check the order-N TT expansion at a point")
    _add_function(p)
    p.add_argument("--point", required=True)
    p.add_argument("-N", "--order", type=int, required=True)
    p.add_argument("--tol", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("probe", help="Estimate a sup-norm (or regularity factors with -N)")
    _add_function(p)
    p.add_argument("--ball", default=None, help="row:d, polydisk:d, column:d or pencil:FILE")
    p.add_argument("--level", type=_positive_int, default=1)
    p.add_argument("--budget", type=_positive_int, default=1000)
    p.add_argument("--margin", type=float, default=None, help="Fixed multistart margin")
    p.add_argument("-N", "--order", type=int, default=None, help="Estimate order-N regularity factors")
    _add_common(p)

    p = sub.add_parser("blowup", help="Evaluate along a path approaching the boundary")
    _add_function(p)
    p.add_argument("--path", default="builtin")
    p.add_argument("--eps", type=_float_list, required=True)
    p.add_argument("--ball", default=None)
    _add_common(p)

    p = sub.add_parser("dichotomy", help="Interior/boundary classification of ||P(F(X))||")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--case", choices=sorted(DICHOTOMY_CASES))
    group.add_argument("--map", help="Semicolon-separated component polynomials")
    p.add_argument("--ball", default="polydisk:2", help="Source ball")
    p.add_argument("--target-ball", default=None, help="Target ball (default: source ball)")
    p.add_argument("--level", type=_positive_int, default=1)
    p.add_argument("--samples", type=_positive_int, default=100)
    _add_common(p)

    p = sub.add_parser("variety", help="Membership of a point in an algebraic variety")
    p.add_argument("--variety", required=True, help="Variety JSON file")
    p.add_argument("--point", required=True)
    p.add_argument("--tol", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("reproduce", help="Reproduce a worked example")
    p.add_argument("name", choices=REPRODUCE_TARGETS)
    p.add_argument("--samples", type=int, default=10)
    _add_common(p)
    return parser


def _function(args, d: Optional[int] = None):
    if args.poly is not None:
        dim = args.dim or d
        if dim is None:
            raise UsageError("--poly needs a dimension: pass -d/--dim")
        return parse(args.poly, dim)
    if args.realization is not None:
        return resolve_realization(args.realization)
    if args.target is not None:
        return resolve_target(args.target)
    raise UsageError("one of --poly, --realization or --target is required")


def _ball_for(args, f) -> OperatorBall:
    if args.ball is not None:
        return resolve_ball(args.ball)
    pencil = ball_pencil_of(f)
    if pencil is None:
        raise UsageError("--ball is required for this function")
    return OperatorBall(pencil)


def _run(args) -> CsvTable:
    seed = Configs().DEFAULT_SEED if args.seed is None else args.seed
    evaluation = EvaluationController()
    probe = ProbeController()

    if args.command == "eval":
        X = resolve_point(args.point)
        return evaluation.evaluate(_function(args, X.d), X)
    if args.command == "coeff":
        f = _function(args)
        word = parse_word(args.word, f.d) if args.word else None
        if not isinstance(f, FreePolynomial) and not hasattr(f, "coefficient"):
            raise UsageError("coefficients need a polynomial or a realization")
        return evaluation.coefficients(f, word=word, order=args.order)
    if args.command == "delta":
        if args.point is not None:
            x = resolve_point(args.point).scalars()
        elif args.x is not None:
            x = args.x
        else:
            raise UsageError("delta needs --point or --x")
        f = _function(args, len(x))
        h = args.direction or [1] + [0] * (len(x) - 1)
        return evaluation.delta(f, x, h)
    if args.command == "tt-check":
        X = resolve_point(args.point)
        f = _function(args, X.d)
        if not isinstance(f, FreePolynomial) and not hasattr(f, "pencil"):
            raise UsageError("tt-check needs a polynomial or a realization")
        return evaluation.tt_check(f, X, args.order, args.tol)
    if args.command == "probe":
        ball = resolve_ball(args.ball) if args.ball else None
        f = _function(args, ball.d if ball else None)
        ball = ball or _ball_for(args, f)
        if args.order is not None:
            return probe.regularity(f, args.order, ball, args.level, args.budget, seed)
        target = args.poly or args.realization or args.target
        _, table = probe.estimate(f, ball, args.level, args.budget, seed, target=target, margin=args.margin)
        return table
    if args.command == "blowup":
        ball = resolve_ball(args.ball) if args.ball else None
        f = _function(args, ball.d if ball else None)
        return probe.blowup(f, resolve_path(args.path), args.eps, ball or _ball_for(args, f))
    if args.command == "dichotomy":
        source = resolve_ball(args.ball)
        target = resolve_ball(args.target_ball) if args.target_ball else source
        texts = DICHOTOMY_CASES[args.case] if args.case else [t for t in args.map.split(";") if t.strip()]
        F = [parse(text, source.d) for text in texts]
        return probe.dichotomy(F, source, target.pencil, args.samples, seed, n=args.level)
    if args.command == "variety":
        return VarietyController().membership(resolve_variety(args.variety), resolve_point(args.point), args.tol)
    if args.command == "reproduce":
        return ReproduceController().reproduce(args.name, seed, args.samples)
    raise UsageError(f"unknown subcommand {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as error:
        print(f"usage error: {error}", file=sys.stderr)
        return 2
    logging.basicConfig(
        level=(args.log_level or Configs().LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        table = _run(args)
    except (
        UsageError,
        ShorthandError,
        ExpressionSyntaxError,
        FileNotFoundError,
        json.JSONDecodeError,
        pydantic.ValidationError,
    ) as error:
        print(f"usage error: {error}", file=sys.stderr)
        return 2
    except NcError as error:
        print(str(error), file=sys.stderr)
        return 1
    CsvUtils.write(table.render(), args.out)
    if args.out:
        logger.info("Wrote %d rows to %s", len(table.rows), args.out)
    return 0
