"""Command line surface: verification, factoring, bounds, corpus checks and search.

Data goes to stdout and is byte-identical across runs; diagnostics go through
logging to stderr. Exit statuses: 0 success, 1 verification failure, 2 usage or
input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, List, Sequence

from .bounds import BoundsError, corpus_gcd_upper_bound, lower_bound
from .corpus import (
    CorpusError,
    check_entry,
    check_gaussian_table,
    format_integer_row,
    load_corpus,
    load_corpus_file,
    load_gaussian_table,
    load_integer_table,
    load_known_bad,
)
from .gint import GaussianInt, GaussianIntError, factor
from .logging_integration import configure_from_settings
from .pte import (
    PteSolution,
    SolutionError,
    SolutionParseError,
    constant,
    emit_solutions,
    equivalent,
    parse_solutions,
    verify_degree,
)
from .search import (
    CheckpointError,
    SearchConfig,
    SearchConfigError,
    SearchInconsistencyError,
    SearchMode,
    conjugate_pairs,
    resolve_sieve_primes,
    run,
)
from .settings import RuntimeSettings, SettingsError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


@dataclass(frozen=True)
class CommandResult:
    status: int
    output: str = ""
    error: str = ""


class _UsageError(Exception):
    pass


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _lines(lines: Iterable[str]) -> str:
    text = "\n".join(lines)
    return text + "\n" if text else ""


def _read_solutions(path: str) -> List[PteSolution]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_solutions(text)


# Subcommands ----------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    lines = []
    status = EXIT_OK
    for s in _read_solutions(args.file):
        degree = verify_degree(s)
        valid = degree >= s.claimed_degree  # type: ignore[operator]
        if not valid:
            status = EXIT_VERIFICATION_FAILED
        lines.append(
            f"n={s.n} degree={degree} ideal={_yes(degree >= s.n - 1)} valid={_yes(valid)}"
        )
    return CommandResult(status, _lines(lines))


def _cmd_constant(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    lines = []
    status = EXIT_OK
    for s in _read_solutions(args.file):
        degree = verify_degree(s)
        if degree < s.n - 1:
            status = EXIT_VERIFICATION_FAILED
            lines.append(f"n={s.n} not ideal (degree={degree})")
            continue
        value = constant(s)
        lines.append(f"n={s.n} constant={value} factored={factor(value)}")
    return CommandResult(status, _lines(lines))


def _cmd_factor(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    value = GaussianInt.parse(args.value)
    result = factor(value, budget_bits=settings.factor_budget_bits)
    return CommandResult(EXIT_OK, f"{value} = {result}\n")


def _cmd_bounds(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    if args.max_size < 2:
        raise _UsageError("--max-size must be at least 2")
    lines = []
    for m in range(2, args.max_size + 1):
        entry = lower_bound(m)
        provenance = ",".join(c.format() for c in entry.provenance) or "none"
        lines.append(f"{entry.format()} provenance={provenance}")
    return CommandResult(EXIT_OK, _lines(lines))


def _cmd_equiv(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    solutions = _read_solutions(args.file)
    lines = []
    matched = set()
    for i in range(len(solutions)):
        for j in range(i + 1, len(solutions)):
            a, b = solutions[i], solutions[j]
            if a.n != b.n:
                lines.append(f"{i + 1} {j + 1} sizes-differ")
                continue
            witness = equivalent(a, b)
            if witness is None:
                lines.append(f"{i + 1} {j + 1} inequivalent")
            else:
                matched.add((i, j))
                lines.append(f"{i + 1} {j + 1} equivalent {witness}")
    # equivalent pairs are already reported
    for i, j in conjugate_pairs(solutions):
        if (i, j) not in matched:
            lines.append(f"conjugates {i + 1} {j + 1}")
    return CommandResult(EXIT_OK, _lines(lines))


def _cmd_gcd_upper(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    solutions = _read_solutions(args.file)
    bound = corpus_gcd_upper_bound(solutions, with_conjugates=args.with_conjugates)
    return CommandResult(
        EXIT_OK, f"n={solutions[0].n} upper={bound.format(include_unit=False)}\n"
    )


def _cmd_corpus_check(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    entries = load_corpus() if args.corpus is None else load_corpus_file(Path(args.corpus))
    lines = []
    status = EXIT_OK
    for entry in entries:
        report = check_entry(entry)
        if not report.ok:
            status = EXIT_VERIFICATION_FAILED
        lines.append(report.format())
    for bad in load_known_bad():
        lines.append(f"known-bad {bad.id} skipped ({len(bad.x)} vs {len(bad.y)} elements)")
    for row in check_gaussian_table(load_gaussian_table(), entries):
        if not row.sound:
            status = EXIT_VERIFICATION_FAILED
        lines.append(row.format())
    for integer_row in load_integer_table():
        if integer_row.lower_divides_upper() is False:
            status = EXIT_VERIFICATION_FAILED
        lines.append(format_integer_row(integer_row))
    return CommandResult(status, _lines(lines))


def _cmd_search(args: argparse.Namespace, settings: RuntimeSettings) -> CommandResult:
    mode = SearchMode(args.mode)
    cfg = SearchConfig(
        n=args.size,
        mode=mode,
        box=args.box,
        k=args.k,
        sieve_primes=resolve_sieve_primes(args.sieve, args.size, mode),
        chunk_count=args.chunks,
        output=None if args.out is None else Path(args.out),
        checkpoint=None if args.checkpoint is None else Path(args.checkpoint),
        workers=args.workers or settings.workers,
        budget_bits=settings.factor_budget_bits,
    )
    solutions = run(cfg)
    if cfg.output is not None:
        logger.info("%d solutions written to %s", len(solutions), cfg.output)
        return CommandResult(EXIT_OK)
    return CommandResult(EXIT_OK, emit_solutions(solutions))


# Parsing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussian-pte",
        description="Prouhet-Tarry-Escott solutions over the Gaussian integers",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Report the degree of every solution in FILE")
    verify.add_argument("file")
    verify.set_defaults(handler=_cmd_verify)

    constant_cmd = commands.add_parser("constant", help="Constant and factorization per ideal solution")
    constant_cmd.add_argument("file")
    constant_cmd.set_defaults(handler=_cmd_constant)

    factor_cmd = commands.add_parser("factor", help='Factor a Gaussian integer given as "(a,b)"')
    factor_cmd.add_argument("value")
    factor_cmd.set_defaults(handler=_cmd_factor)

    bounds = commands.add_parser("bounds", help="Lower bounds for C_n with provenance")
    bounds.add_argument("--max-size", type=int, required=True)
    bounds.set_defaults(handler=_cmd_bounds)

    equiv = commands.add_parser("equiv", help="Pairwise equivalence of the solutions in FILE")
    equiv.add_argument("file")
    equiv.set_defaults(handler=_cmd_equiv)

    gcd_upper = commands.add_parser("gcd-upper", help="Upper bound from the gcd of constants")
    gcd_upper.add_argument("file")
    gcd_upper.add_argument("--with-conjugates", action="store_true")
    gcd_upper.set_defaults(handler=_cmd_gcd_upper)

    corpus = commands.add_parser("corpus", help="Bundled corpus tools")
    corpus_commands = corpus.add_subparsers(dest="corpus_command", required=True)
    corpus_check = corpus_commands.add_parser("check", help="Re-verify the corpus and tables")
    corpus_check.add_argument("--corpus", default=None, help="Corpus JSON file to check instead")
    corpus_check.set_defaults(handler=_cmd_corpus_check)

    search = commands.add_parser("search", help="Search for ideal solutions")
    search.add_argument("--size", type=int, required=True)
    search.add_argument("--mode", choices=[m.value for m in SearchMode], required=True)
    search.add_argument("--box", type=int, required=True)
    search.add_argument("--k", type=int, default=None)
    search.add_argument(
        "--sieve",
        default="auto",
        help='"auto", "none" or two primes such as "(3,2),(3,-2)"',
    )
    search.add_argument("--chunks", type=int, default=1)
    search.add_argument("--checkpoint", default=None)
    search.add_argument("--out", default=None)
    search.add_argument("--workers", type=int, default=None, help="Defaults to GPTE_WORKERS")
    search.set_defaults(handler=_cmd_search)
    return parser


def parse_args(argv: Iterable[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(None if argv is None else list(argv))


_USAGE_ERRORS = (
    _UsageError,
    SolutionParseError,
    GaussianIntError,
    BoundsError,
    SearchConfigError,
    CheckpointError,
    CorpusError,
)


def run_command(
    argv: Sequence[str], *, settings: RuntimeSettings | None = None
) -> CommandResult:
    """Execute one subcommand and return its status and stdout text."""

    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return CommandResult(exc.code if isinstance(exc.code, int) else EXIT_USAGE)
    settings = settings or RuntimeSettings.from_env()
    handler: Callable[[argparse.Namespace, RuntimeSettings], CommandResult] = args.handler
    try:
        return handler(args, settings)
    except SearchInconsistencyError as exc:
        logger.error("internal inconsistency: %s", exc)
        return CommandResult(EXIT_INCONSISTENT, error=f"internal inconsistency: {exc}\n")
    except _USAGE_ERRORS as exc:
        return CommandResult(EXIT_USAGE, error=f"error: {exc}\n")
    except SolutionError as exc:
        # readable input that fails a requirement such as idealness
        return CommandResult(EXIT_VERIFICATION_FAILED, error=f"error: {exc}\n")


def main(argv: Iterable[str] | None = None) -> int:
    arguments: List[str] = sys.argv[1:] if argv is None else list(argv)
    try:
        settings = RuntimeSettings.from_env()
    except SettingsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    setup = configure_from_settings(settings)
    try:
        result = run_command(arguments, settings=settings)
        if result.output:
            sys.stdout.write(result.output)
        if result.error:
            sys.stderr.write(result.error)
        return result.status
    finally:
        setup.shutdown()


__all__ = [
    "CommandResult",
    "EXIT_INCONSISTENT",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VERIFICATION_FAILED",
    "build_parser",
    "emit_solutions",
    "main",
    "parse_args",
    "parse_solutions",
    "run_command",
]


if __name__ == "__main__":
    raise SystemExit(main())
