import argparse
import re
import sys
from enum import IntEnum
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from loguru import logger
from pydantic import ValidationError

from src.core.errors import MalformedSpecError, NumberTheoryError, TheoremViolationError
from src.core.local import local_report
from src.core.models import LocalOutcome, ResidueClass, SearchSpec, TwoSquaresRecord, build
from src.core.search import verify_none
from src.core.two_squares import is_sum_of_two_squares, two_square_representations
from src.cli.output import RecordWriter
from src.families import (
    Family,
    FamilyTarget,
    density_report,
    generate,
    landau_report,
    make_target,
    match_family,
    sweep,
    witness,
)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    FOUND = 3
    OBSTRUCTED = 4
    UNDECIDED = 5


_SCIENTIFIC = re.compile(r"^(\d+)e(\d+)$")


def _integer(text: str) -> int:
    """Exact integer; accepts 1e12-style shorthand"""
    try:
        return int(text)
    except ValueError:
        pass
    match = _SCIENTIFIC.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(match.group(1)) * 10 ** int(match.group(2))


def _integer_list(text: str) -> List[int]:
    return [_integer(part) for part in text.split(",") if part]


def _residue_class(text: str) -> ResidueClass:
    try:
        return ResidueClass.parse(text)
    except MalformedSpecError as e:
        raise argparse.ArgumentTypeError(str(e))


def _family(text: str) -> Family:
    try:
        return Family(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"family must be thm1, thm2 or thm3, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqpow",
        description="Integers that are not x^2 + y^2 + z^k under a residue constraint on z",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="list the targets of a family")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=_integer, required=True)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p = sub.add_parser("verify", help="exhaustively search a z window for representations")
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--z-class", type=_residue_class, default=ResidueClass())
    p.add_argument("--z-min", type=_integer)
    p.add_argument("--z-max", type=_integer)
    p.add_argument("--positive", action="store_true", help="require x, y, z >= 1")

    p = sub.add_parser("witness", help="certificate for one family target and one z")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=_integer, required=True)
    p.add_argument("--cofactor", type=_integer, default=1)
    p.add_argument("--z", type=_integer, required=True)

    p = sub.add_parser("local", help="local solvability report")
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--z-class", type=_residue_class, default=ResidueClass())
    p.add_argument("--bound", type=int)
    p.add_argument("--max-level", type=int)

    p = sub.add_parser("count", help="family counts against the predicted density")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limits", type=_integer_list, required=True)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p = sub.add_parser("twosquares", help="is n a sum of two squares")
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--list", action="store_true", help="also list every representation")

    p = sub.add_parser("landau", help="counts of integers built from primes 1 mod 4")
    p.add_argument("--limits", type=_integer_list, required=True)
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    p = sub.add_parser("sweep", help="search, witness and local-check every target of a family")
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=_integer, required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--max-level", type=int)

    return parser


def _generate(args, out: RecordWriter) -> int:
    for target in generate(args.family, args.k, args.limit):
        out.write(target)
    return ExitCode.OK


def _verify_spec(args, target: Optional[FamilyTarget]) -> SearchSpec:
    z_min, z_max = args.z_min, args.z_max
    if z_min is None or z_max is None:
        if target:
            default_min, default_max = target.acceptance_window()
        else:
            window = SearchSpec.default_window(args.n, args.k, args.z_class, args.positive)
            # the command line stays on the non-negative side unless asked
            default_min, default_max = max(window.z_min, 0), window.z_max
        z_min = default_min if z_min is None else z_min
        z_max = default_max if z_max is None else z_max
    return build(
        SearchSpec,
        n=args.n,
        k=args.k,
        z_class=args.z_class,
        z_min=z_min,
        z_max=z_max,
        require_positive_xyz=args.positive,
    )


def _verify(args, out: RecordWriter) -> int:
    target = match_family(args.n, args.k, args.z_class) if args.n >= 1 else None
    if target and target.positivity != args.positive:
        target = None

    record = verify_none(_verify_spec(args, target))
    out.write(record)
    if not record.found:
        return ExitCode.OK
    if target:
        logger.error(f"Theorem violation: {target.family.value} target {args.n} has {record.found}")
    return ExitCode.FOUND


def _witness(args, out: RecordWriter) -> int:
    target = make_target(args.family, args.k, args.p, args.cofactor)
    out.write(witness(target, args.z))
    return ExitCode.OK


def _local(args, out: RecordWriter) -> int:
    report = local_report(args.n, args.k, args.z_class, args.bound, args.max_level)
    out.write(report)
    return {
        LocalOutcome.NO_OBSTRUCTION: ExitCode.OK,
        LocalOutcome.OBSTRUCTED: ExitCode.OBSTRUCTED,
        LocalOutcome.UNDECIDED: ExitCode.UNDECIDED,
    }[report.outcome]


def _count(args, out: RecordWriter) -> int:
    for row in density_report(args.family, args.k, args.limits):
        out.write(row)
    return ExitCode.OK


def _twosquares(args, out: RecordWriter) -> int:
    record = TwoSquaresRecord(n=args.n, sum_of_two_squares=is_sum_of_two_squares(args.n))
    if args.list:
        record.representations = two_square_representations(args.n)
    out.write(record)
    return ExitCode.OK


def _landau(args, out: RecordWriter) -> int:
    for row in landau_report(args.limits):
        out.write(row)
    return ExitCode.OK


def _sweep(args, out: RecordWriter) -> int:
    summary = sweep(args.family, args.k, args.limit, args.bound, args.max_level)
    out.write(summary)
    if summary.representations_found or summary.witness_failures:
        return ExitCode.FOUND
    if summary.obstructed:
        return ExitCode.OBSTRUCTED
    if summary.undecided:
        return ExitCode.UNDECIDED
    return ExitCode.OK


_COMMANDS: Dict[str, Callable[..., int]] = {
    "generate": _generate,
    "verify": _verify,
    "witness": _witness,
    "local": _local,
    "count": _count,
    "twosquares": _twosquares,
    "landau": _landau,
    "sweep": _sweep,
}


def _configure_logging(verbosity: int) -> None:
    logger.remove()
    level = {0: "WARNING", 1: "INFO"}.get(verbosity, "DEBUG")
    logger.add(sys.stderr, level=level, format="{time:HH:mm:ss} | {level: <8} | {message}")


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Parse argv, run one subcommand and return its exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.verbose)
    fmt = getattr(args, "format", "jsonl")

    with RecordWriter(stdout or sys.stdout, fmt) as out:
        try:
            return int(_COMMANDS[args.command](args, out))
        except TheoremViolationError as e:
            logger.error(str(e))
            return ExitCode.FOUND
        except (NumberTheoryError, ValidationError) as e:
            logger.error(str(e))
            return ExitCode.USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
