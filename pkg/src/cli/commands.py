"""
Command-line interface.

    python -m src.cli info     --ell 2 --op "z*M^2 + (z-1)*M - 2"
    python -m src.cli solve    --op-file operators/rudin_shapiro.json --height 8 --json
    python -m src.cli extend   --op-file operators/intro_example.json --initial-file f0.json --bound -1/16
    python -m src.cli solve    --op "M - 1" --ell 2 --exponents -1/2,0

Exit codes: 0 success, 2 invalid input, 3 memory budget exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, TypeAdapter, ValidationError

from src import __version__
from src.arith.field import PrimeField, QQ
from src.arith.rationals import naive_height_set, parse_rational
from src.arith.sorted_set import SortedRationalSet
from src.cli import reports
from src.cli.expression import operator_from_strings, parse_operator
from src.cli.schemas import ErrorOutput, OperatorFile, SeriesTerm, terms_to_series
from src.config import get_settings
from src.errors import BudgetExceededError, MahlersolError
from src.series.operator import MahlerOperator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3

_series_adapter = TypeAdapter(List[SeriesTerm])

# options whose value may be a negative rational such as "-1/2,0"
_RATIONAL_OPTIONS = ("--exponents", "--bound")


# ==================== argument parsing ====================

def _operator_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_mutually_exclusive_group(required=True)
    source.add_argument("--op", help='operator expression, e.g. "z*M^2 + (z-1)*M - 2"')
    source.add_argument("--op-file", type=Path, help="JSON operator file")
    parent.add_argument("--ell", type=int, help="Mahler radix (required with --op)")
    parent.add_argument("--prime", type=int, help="work over GF(prime) instead of QQ")
    parent.add_argument("--json", action="store_true", help="emit JSON")
    parent.add_argument("--budget", type=int, help="maximum receptacle level size")
    parent.add_argument("-v", "--verbose", action="count", default=0)
    return parent


def _exponent_options(required: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_mutually_exclusive_group(required=required)
    group.add_argument("--exponents", help='comma separated rationals, e.g. "-1/2,0,1"')
    group.add_argument("--height", type=int, help="use all rationals of naive height <= N")
    return parent


def attach_rational_values(argv: List[str]) -> List[str]:
    """Rewrite `--exponents -1/2,0` as `--exponents=-1/2,0` so argparse keeps the value."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token == "--":
            out.extend(argv[i:])
            break
        if token in _RATIONAL_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahlersol",
        description="Truncations of the Hahn-series solutions of linear Mahler equations",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    op = _operator_options()

    sub.add_parser("info", parents=[op], help="Newton polygon data")

    membership = sub.add_parser("membership", parents=[op], help="decide v in V")
    membership.add_argument("value", help="rational v")

    epsilon = sub.add_parser("epsilon", parents=[op], help="lower bound on eps(v)")
    epsilon.add_argument("value", help="rational v")
    epsilon.add_argument("--trace", action="store_true", help="include the recursion trace")

    sub.add_parser("tau", parents=[op], help="lower bound on tau")

    sub.add_parser("rset", parents=[op, _exponent_options(True)], help="the finite set R")
    sub.add_parser("solve", parents=[op, _exponent_options(True)], help="solution truncations")

    verify = sub.add_parser("verify", parents=[op, _exponent_options(True)],
                            help="residual of a series on psi(R)")
    verify.add_argument("--solution-file", type=Path, required=True, help="series JSON")

    extend = sub.add_parser("extend", parents=[op, _exponent_options(False)],
                            help="greedy extension of initial data")
    extend.add_argument("--initial-file", type=Path, required=True, help="series JSON on -S(L)")
    extend.add_argument("--bound", required=True, help="largest exponent to compute")
    return parser


# ==================== input helpers ====================

def load_operator(args: argparse.Namespace) -> MahlerOperator:
    if args.op_file is not None:
        document = OperatorFile.model_validate_json(args.op_file.read_text())
        prime = args.prime if args.prime is not None else document.prime
        field = PrimeField(prime) if prime else QQ
        return operator_from_strings(document.ell, document.coefficients, field)
    if args.ell is None:
        raise MahlersolError("--ell is required with --op")
    field = PrimeField(args.prime) if args.prime else QQ
    return parse_operator(args.op, args.ell, field)


def load_exponents(args: argparse.Namespace) -> Optional[SortedRationalSet]:
    if getattr(args, "height", None) is not None:
        return naive_height_set(args.height)
    if getattr(args, "exponents", None) is not None:
        parts = [p for p in args.exponents.split(",") if p.strip()]
        return SortedRationalSet(parse_rational(p) for p in parts)
    return None


def load_series(path: Path, L: MahlerOperator):
    terms = _series_adapter.validate_json(path.read_text())
    return terms_to_series(terms, L.field)


# ==================== rendering ====================

def _render_text(model: BaseModel) -> str:
    lines = []
    for key, value in model.model_dump().items():
        if value is None:
            continue
        if isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{key}:")
            for item in value:
                lines.append(f"  {_format_series(item)}")
        elif isinstance(value, list):
            lines.append(f"{key}: {', '.join(_format_item(v) for v in value)}")
        elif isinstance(value, dict):
            inner = ", ".join(f"{k}={v}" for k, v in value.items())
            lines.append(f"{key}: {inner}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _format_item(value) -> str:
    if isinstance(value, dict) and "exponent" in value:
        return f"({value['coefficient']})*z^({value['exponent']})"
    if isinstance(value, dict):
        return "(" + ", ".join(f"{k}={v}" for k, v in value.items()) + ")"
    return str(value)


def _format_series(terms) -> str:
    if not terms:
        return "0"
    if isinstance(terms[0], dict) and "exponent" in terms[0]:
        return " + ".join(_format_item(t) for t in terms)
    return str(terms)


def emit(model: BaseModel, as_json: bool) -> None:
    if as_json:
        print(model.model_dump_json(indent=2))
    else:
        print(_render_text(model))


# ==================== dispatch ====================

def run_command(args: argparse.Namespace) -> BaseModel:
    L = load_operator(args)
    budget = args.budget if args.budget is not None else get_settings().memory_budget

    if args.command == "info":
        return reports.info_report(L)
    if args.command == "membership":
        return reports.membership_report(L, parse_rational(args.value), budget=budget)
    if args.command == "epsilon":
        return reports.epsilon_report(L, parse_rational(args.value), trace=args.trace)
    if args.command == "tau":
        return reports.tau_report(L)
    if args.command == "rset":
        return reports.rset_report(L, load_exponents(args), budget=budget)
    if args.command == "solve":
        return reports.solve_report(L, load_exponents(args), budget=budget)
    if args.command == "verify":
        f = load_series(args.solution_file, L)
        return reports.verify_report(L, f, load_exponents(args), budget=budget)
    if args.command == "extend":
        f0 = load_series(args.initial_file, L)
        return reports.extend_report(L, f0, parse_rational(args.bound),
                                     E=load_exponents(args), budget=budget)
    raise MahlersolError(f"unknown command {args.command}")


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(attach_rational_values(list(argv)))
    _configure_logging(args.verbose)

    try:
        model = run_command(args)
    except BudgetExceededError as e:
        _report_error(e, args.json)
        return EXIT_BUDGET
    except (MahlersolError, ValidationError, json.JSONDecodeError, OSError) as e:
        _report_error(e, args.json)
        return EXIT_INVALID

    emit(model, args.json)
    return EXIT_OK


def _report_error(error: Exception, as_json: bool) -> None:
    logger.debug("command failed", exc_info=error)
    if as_json:
        print(ErrorOutput(error=str(error), kind=type(error).__name__).model_dump_json(indent=2))
    else:
        print(f"error: {error}", file=sys.stderr)
