"""
Command line interface.

Exit codes:
    0  the command completed and its assertion holds
    1  verify found no unique extension, or detect found a pattern
    2  usage error
    3  the grid file could not be read or parsed
    4  improper grid, or invalid construction or search parameters
    5  search budget exceeded or solver node budget reached
"""

import argparse
import hashlib
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from latindef._config import load_settings
from latindef._enums import ExitCode, OutputFormat
from latindef._exceptions import (
    BudgetExceededError,
    GridParseError,
    LatinSquareError,
)
from latindef._logger import LOGGER_NAME, logger, set_logger
from latindef.constructions import (
    ConstructionKind,
    ConstructionSpec,
    build_construction,
)
from latindef.core.grid_format import format_grid, read_grid, write_grid
from latindef.patterns import detect_all
from latindef.search import SearchOptions, defining_number
from latindef.solver import Verdict, initialize_solver
from latindef.VERSION import __version__


@dataclass
class CommandReport:
    """
    What a command did. `outcome` follows the JSON report schema and
    `lines` is its human-readable rendering.
    """

    command: str
    input_digest: str
    outcome: dict[str, Any] = field(default_factory=dict)
    exit_code: ExitCode = ExitCode.OK
    lines: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            **self.outcome,
            "exit_code": int(self.exit_code),
        }

    def render(self, output_format: OutputFormat = OutputFormat.TEXT) -> str:
        if output_format is OutputFormat.JSON:
            return json.dumps(self.to_dict(), indent=2, sort_keys=True)
        return "\n".join(self.lines)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _file_digest(path: Path) -> str:
    try:
        return _digest(path.read_bytes())
    except OSError:
        return _digest(str(path).encode("utf-8"))


def _exit_code_for(error: LatinSquareError) -> ExitCode:
    if isinstance(error, GridParseError):
        return ExitCode.PARSE_ERROR
    if isinstance(error, BudgetExceededError):
        return ExitCode.BUDGET
    return ExitCode.IMPROPER_INPUT


def _guarded(
    command: str, digest: str, action: Callable[[], CommandReport]
) -> CommandReport:
    """Run a command body, turning domain errors into a failure report."""
    try:
        return action()
    except LatinSquareError as e:
        exit_code = _exit_code_for(e)
        logger.info(f"{command} failed with exit code {int(exit_code)}: {e}")
        return CommandReport(
            command=command,
            input_digest=digest,
            outcome={"error": type(e).__name__, "message": str(e)},
            exit_code=exit_code,
            lines=[f"error: {e}"],
        )


def cmd_construct(
    kind: ConstructionKind, n: Optional[int], out_path: Optional[Path] = None
) -> CommandReport:
    """
    Build a construction and write it in the text grid format, to
    `out_path` or into the report.
    """
    digest = _digest(f"construct {kind.value} {n}".encode("utf-8"))

    def run() -> CommandReport:
        pc = build_construction(ConstructionSpec(kind, n))
        lines = [
            f"{kind.value}: n={pc.order} k={pc.num_colors} "
            f"empty={pc.uncolored_count}"
        ]
        if out_path is not None:
            write_grid(pc, out_path)
            lines.append(f"written to {out_path}")
        else:
            lines.append(format_grid(pc).rstrip("\n"))
        return CommandReport(
            command="construct",
            input_digest=digest,
            outcome={
                "kind": kind.value,
                "n": pc.order,
                "k": pc.num_colors,
                "empty": pc.uncolored_count,
                "colored": pc.colored_count,
                "grid": pc.to_rows(),
            },
            lines=lines,
        )

    return _guarded("construct", digest, run)


def cmd_verify(
    path: Path,
    cap: int = 2,
    *,
    node_budget: Optional[int] = None,
    workers: Optional[int] = None,
    out_path: Optional[Path] = None,
) -> CommandReport:
    """
    Decide whether the grid in `path` extends uniquely. Exit code 0 iff it
    does; the completion is written to `out_path` when given.
    """
    digest = _file_digest(path)

    def run() -> CommandReport:
        pc = read_grid(path)
        solver = initialize_solver(node_budget=node_budget, workers=workers)
        report = solver.count_extensions(pc, cap)
        lines = [
            f"verdict: {report.verdict.value}",
            f"nodes: {report.nodes_explored}",
        ]
        if report.completion is not None:
            if out_path is not None:
                write_grid(report.completion, out_path)
                lines.append(f"completion written to {out_path}")
            else:
                lines.append(str(report.completion))
        for number, witness in enumerate(report.witnesses, start=1):
            lines.append(f"witness {number}:")
            lines.append(str(witness))

        if report.verdict is Verdict.UNIQUE:
            exit_code = ExitCode.OK
        elif report.verdict is Verdict.ABORTED:
            exit_code = ExitCode.BUDGET
        else:
            exit_code = ExitCode.ASSERTION_FAILED
        return CommandReport(
            command="verify",
            input_digest=digest,
            outcome={"n": pc.order, "k": pc.num_colors, **report.to_dict()},
            exit_code=exit_code,
            lines=lines,
        )

    return _guarded("verify", digest, run)


def cmd_detect(path: Path) -> CommandReport:
    """Report every forbidden configuration found; exit code 0 iff none."""
    digest = _file_digest(path)

    def run() -> CommandReport:
        pc = read_grid(path)
        witnesses = detect_all(pc)
        lines = [str(witness) for witness in witnesses] or ["none"]
        return CommandReport(
            command="detect",
            input_digest=digest,
            outcome={
                "n": pc.order,
                "k": pc.num_colors,
                "patterns": [witness.to_dict() for witness in witnesses],
            },
            exit_code=(
                ExitCode.ASSERTION_FAILED if witnesses else ExitCode.OK
            ),
            lines=lines,
        )

    return _guarded("detect", digest, run)


def cmd_search(
    n: int,
    k: int,
    budget: Optional[int] = None,
    *,
    workers: int = 1,
    out_path: Optional[Path] = None,
    symmetry: bool = True,
    prune: bool = True,
) -> CommandReport:
    """
    Compute d(L(n, k)) and write its witness to `out_path` when given.
    """
    digest = _digest(f"search {n} {k}".encode("utf-8"))

    def run() -> CommandReport:
        options = SearchOptions(
            symmetry=symmetry, prune=prune, workers=workers, budget=budget
        )
        result = defining_number(n, k, options)
        if out_path is not None:
            write_grid(result.witness, out_path)
        lines = [
            "n k d witness-file",
            result.table_row(out_path),
            f"source: {result.source.value}",
        ]
        if out_path is None:
            lines.append(str(result.witness))
        return CommandReport(
            command="search",
            input_digest=digest,
            outcome=result.to_dict(),
            lines=lines,
        )

    return _guarded("search", digest, run)


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _cap(raw: str) -> int:
    value = _positive_int(raw)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latindef",
        description=(
            "Generalized Latin squares L(n,k): constructions, unique "
            "extension checks, forbidden configurations and defining "
            "numbers."
        ),
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="report format (default: text)",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="logging level (default: LATINDEF_LOG_LEVEL or WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    construct = subparsers.add_parser("construct", help="build a construction")
    construct.add_argument(
        "kind", choices=[kind.value for kind in ConstructionKind]
    )
    construct.add_argument("n", type=int, nargs="?", default=None)
    construct.add_argument("--out", type=Path, default=None)

    verify = subparsers.add_parser(
        "verify", help="decide unique extendability of a grid file"
    )
    verify.add_argument("path", type=Path)
    verify.add_argument(
        "--cap",
        type=_cap,
        default=2,
        help="stop after this many completions (at least 2)",
    )
    verify.add_argument(
        "--budget-nodes",
        type=_positive_int,
        default=None,
        help="search node limit, shared among --threads workers",
    )
    verify.add_argument("--threads", type=_positive_int, default=None)
    verify.add_argument("--out", type=Path, default=None)

    detect = subparsers.add_parser(
        "detect", help="find forbidden configurations in a grid file"
    )
    detect.add_argument("path", type=Path)

    search = subparsers.add_parser(
        "search", help="compute the defining number d(L(n,k))"
    )
    search.add_argument("n", type=_positive_int)
    search.add_argument("k", type=_positive_int)
    search.add_argument("--budget", type=_positive_int, default=None)
    search.add_argument("--threads", type=_positive_int, default=1)
    search.add_argument("--out", type=Path, default=None)
    search.add_argument(
        "--no-symmetry",
        action="store_true",
        help="search every square instead of one per class",
    )
    search.add_argument(
        "--no-prune", action="store_true", help="disable subset pruning"
    )
    return parser


def _configure_logging(level_name: Optional[str]) -> None:
    level_name = (level_name or load_settings().log_level).upper()
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level)
    cli_logger = logging.getLogger(LOGGER_NAME)
    cli_logger.setLevel(level)
    set_logger(cli_logger)


def _dispatch(args: argparse.Namespace) -> CommandReport:
    match args.command:
        case "construct":
            return cmd_construct(
                ConstructionKind(args.kind), args.n, args.out
            )
        case "verify":
            return cmd_verify(
                args.path,
                args.cap,
                node_budget=args.budget_nodes,
                workers=args.threads,
                out_path=args.out,
            )
        case "detect":
            return cmd_detect(args.path)
        case "search":
            return cmd_search(
                args.n,
                args.k,
                args.budget,
                workers=args.threads,
                out_path=args.out,
                symmetry=not args.no_symmetry,
                prune=not args.no_prune,
            )
    raise ValueError(f"Unknown command: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the `latindef` console script.

    Returns:
        int: The exit code of the command; argparse exits with 2 on usage
            errors before a command runs.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    try:
        report = _dispatch(args)
    except Exception:
        logger.exception(f"Unexpected error running {args.command}")
        raise
    print(report.render(OutputFormat(args.format)))
    return int(report.exit_code)


if __name__ == "__main__":
    sys.exit(main())
