"""
engelgroups command line: verification suites, Engel towers and Engel growth.

Exit codes: 0 success, 1 violations found (including a constructed witness that
fails its own check), 2 configuration or parse error, 3 budget or cap exhausted
(including undecided verdicts and towers that do not close within --limit).
"""
import argparse
from typing import Callable, Dict, List, Optional, Sequence

from ..alphabet import parse_signature
from ..config import run_defaults
from ..engel import ClosureMode, QuotientMode, engel_growth, identity_tower, parse_free_word
from ..engel.free_word import FreeWord
from ..metrics import VerificationReport
from ..treeauto import format_word, parse_word
from ..utils.errors import ArityMismatchError, BudgetExhausted, CapExceededError, ConstructionFailed
from ..utils.io import write_report
from ..utils.log import _init_logger, set_level, verbose
from .config import RunConfig
from .suites import SUITES

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3

logger = _init_logger(__name__)


def _scale_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--sig", help="tree signature, e.g. growing:p=3 or regular:p=3,r=5")
    parent.add_argument("--level", type=int, help="level of the generators or of the layer")
    parent.add_argument("--depth", type=int, help="quotient or triviality depth")
    parent.add_argument("--t", type=int, help="E-length bound of the separation suites")
    parent.add_argument("--radius", type=int, help="radius of the word ball")
    parent.add_argument("--count", type=int, help="sample size of sampled modes")
    parent.add_argument("--limit", type=int, help="largest tower index tried")
    parent.add_argument(
        "--iterations", type=int, help="iterates of the identity (local-checking, involution)"
    )
    parent.add_argument("--rank", type=int, help="rank of the base group (abelian-wreath)")
    parent.add_argument(
        "--seed",
        type=int,
        default=run_defaults.get("run", "seed"),
        help="seed of every sampled mode (default: %(default)s)",
    )
    parent.add_argument("--cap", type=int, help="largest ball or group enumerated exhaustively")
    parent.add_argument("--budget", type=int, help="closure budget; switches towers to closure")
    parent.add_argument("--out", help="report file (default: stdout)")
    parent.add_argument(
        "--format",
        choices=("jsonl", "csv"),
        default=run_defaults.get("run", "format"),
        help="report format (default: %(default)s)",
    )
    parent.add_argument("--logfile", help="also write log records to this file")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="engelgroups",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)
    scale = _scale_flags()

    verify = commands.add_parser("verify", parents=[scale], help="run a verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--f", help="label vector f (gamma3-sections)")
    verify.add_argument("--f-prime", dest="f_prime", help="label vector f' (gamma3-sections)")

    tower = commands.add_parser(
        "engel-tower", parents=[scale], help="first trivial term of an Engel tower"
    )
    tower.add_argument("g", help="word, e.g. 'r0:[1]'")
    tower.add_argument("h", help="word, e.g. 'b0'; the empty string is the identity")
    tower.add_argument(
        "--word", help="iterate this identity instead of [x, y1], e.g. 'x x x' or 'X Y1 x y1'"
    )

    commands.add_parser("growth", parents=[scale], help="Engel growth on a word ball")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {
        key: getattr(args, key, None)
        for key in RunConfig.__dataclass_fields__
        if key not in ("command", "format")
    }
    return RunConfig(command=args.command, format=args.format, **fields)


def exit_code(reports: Sequence[VerificationReport]) -> int:
    """1 if any report has violations, else 3 if any case was undecided, else 0."""
    if any(report.violations for report in reports):
        return EXIT_VIOLATIONS
    if any(report.unknown for report in reports):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    params = config.resolve()
    logger.info(f"verify {config.suite}: {params['sig']}")
    reports = SUITES[config.suite](params)
    reports = sorted(reports, key=lambda report: report.case_key)
    for report in reports:
        logger.info(
            f"{report.check} at n={report.n}: {report.tested} tested, "
            f"{len(report.violations)} violation(s), {report.unknown} unknown"
        )
        if report.unknown:
            logger.warning(f"{report.check}: {report.unknown} case(s) left undecided")
    write_report([r.to_record() for r in reports], config.header(), config.out, config.format)
    return exit_code(reports)


def cmd_engel_tower(g_text: str, h_text: str, config: RunConfig) -> int:
    params = config.resolve()
    sig = parse_signature(params["sig"])
    g = parse_word(g_text, sig)
    h = parse_word(h_text, sig, g.level)
    w = parse_free_word(params["word"]) if params.get("word") else FreeWord.commutator()
    if config.budget is not None:
        mode = ClosureMode(config.budget)
    else:
        mode = QuotientMode(params["depth"])
    if w.arity > 1:
        raise ArityMismatchError(f"--word {w} needs {w.arity} words; only h is given")
    result = identity_tower(w, g, [h][: w.arity], params["limit"], mode)
    record = {
        "check": "engel-tower",
        "sig": str(sig),
        "g": format_word(g),
        "h": format_word(h),
        "word": str(w),
        "index": result.index,
        "mode": result.mode,
        "limit": result.limit,
        "trace": list(result.trace),
    }
    logger.info(f"engel-tower: index {result.index} in mode {result.mode}")
    write_report([record], config.header(), config.out, config.format, "experiment")
    return EXIT_OK if result.found else EXIT_BUDGET


def cmd_growth(config: RunConfig) -> int:
    params = config.resolve()
    sig = parse_signature(params["sig"])
    result = engel_growth(sig, params["depth"], params["radius"], params["limit"], config.cap)
    witness = None if result.witness is None else [format_word(w) for w in result.witness]
    record = {
        "check": "growth",
        "sig": str(sig),
        "n": result.radius,
        "depth": result.depth,
        "value": result.value,
        "witness": witness,
        "pairs": result.pairs,
    }
    logger.info(f"growth: e({result.radius}) = {result.value} at depth {result.depth}")
    write_report([record], config.header(), config.out, config.format, "experiment")
    return EXIT_OK if result.value is not None else EXIT_BUDGET


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], int]] = {
    "verify": lambda args, config: cmd_verify(config),
    "engel-tower": lambda args, config: cmd_engel_tower(args.g, args.h, config),
    "growth": lambda args, config: cmd_growth(config),
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``engelgroups`` console script; returns the exit code."""
    args = build_parser().parse_args(argv)
    verbose(logfile=args.logfile)
    # stdout carries the report when there is no --out
    set_level("INFO" if args.out else "WARNING")
    try:
        config = _config_from_args(args)
        return COMMANDS[args.command](args, config)
    except ValueError as err:
        logger.error(f"configuration error: {err}")
        return EXIT_CONFIG
    except ConstructionFailed as err:
        logger.error(f"construction failed: {err}")
        return EXIT_VIOLATIONS
    except (CapExceededError, BudgetExhausted, OverflowError) as err:
        logger.error(f"budget exhausted: {err}")
        return EXIT_BUDGET
