"""Command-line entry point: ``python -m cayley_spectra <subcommand> ...``.

Exit status is 0 on success, 1 when a verdict is false or a numerical check
fails, and 2 on usage errors and exceeded caps.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from .config import EngineConfig
from .errors import (
    CayleySpectraError,
    ConvergenceError,
    DimensionMismatchError,
    PartitionFormatError,
    ShapeError,
)
from .lr import (
    SkewShape,
    enumerate_lr_tableaux,
    lr_coefficient,
    minimal_content,
    minimal_sequence,
    reading_word,
    reconstruct_tableau,
    reduce_equal_rows,
)
from .models import AldousReport, MultipartiteShape, render_json
from .oracle import oracle_check
from .partitions import Partition, format_partition, parse_partition, subtract
from .spectra import (
    admissible_table,
    block_spectrum,
    lambda_max,
    spectral_gap_cayley,
    spectral_gap_graph,
    verify_aldous,
)
from .storage import format_report, save_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _shape(text: str) -> MultipartiteShape:
    try:
        return MultipartiteShape(_partition(text))
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="raise the size cap (formula path; Cayley matrix size for oracle-check)",
    )
    common.add_argument("--allow-n7", action="store_true", help="allow the 5040x5040 Cayley matrix")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="cayley_spectra",
        description="Exact spectra of Cayley graphs of S_n generated by complete multipartite graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    spectrum = commands.add_parser("spectrum", parents=[common], help="eigenvalues of T^alpha[W(K_eta)]")
    spectrum.add_argument("--alpha", type=_partition, required=True)
    spectrum.add_argument("--eta", type=_shape, required=True)

    lmax = commands.add_parser("lmax", parents=[common], help="largest eigenvalue of one block")
    lmax.add_argument("--alpha", type=_partition, required=True)
    lmax.add_argument("--eta", type=_shape, required=True)

    gap = commands.add_parser("gap", parents=[common], help="spectral gaps of K_eta and its Cayley graph")
    gap.add_argument("--eta", type=_shape, required=True)

    aldous = commands.add_parser("aldous", parents=[common], help="compare the two spectral gaps")
    source = aldous.add_mutually_exclusive_group(required=True)
    source.add_argument("--eta", type=_shape)
    source.add_argument("--batch", type=Path, metavar="FILE", help="one eta per line")
    aldous.add_argument(
        "--save",
        nargs="?",
        const="",
        default=None,
        metavar="DIR",
        help="write JSON and text reports (default directory: CAYLEY_OUTPUT_DIR)",
    )

    coeff = commands.add_parser("lr-coeff", parents=[common], help="Littlewood-Richardson coefficient")
    coeff.add_argument("--alpha", type=_partition, required=True)
    coeff.add_argument("--beta", type=_partition, required=True)
    coeff.add_argument("--gamma", type=_partition, required=True)

    tableaux = commands.add_parser("lr-tableaux", parents=[common], help="LR tableaux of shape alpha/beta")
    tableaux.add_argument("--alpha", type=_partition, required=True)
    tableaux.add_argument("--beta", type=_partition, required=True)
    tableaux.add_argument("--gamma", type=_partition, default=None, help="only tableaux of this content")

    minimal = commands.add_parser("minimal-content", parents=[common], help="dominance-minimal LR content")
    minimal.add_argument("--alpha", type=_partition, required=True)
    minimal.add_argument("--beta", type=_partition, required=True)

    check = commands.add_parser("oracle-check", parents=[common], help="cross-check against dense matrices")
    check.add_argument("--eta", type=_shape, required=True)
    check.add_argument("--alpha", type=_partition, action="append", default=None, help="repeatable")

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _config_for(args: argparse.Namespace) -> EngineConfig:
    allow = True if args.allow_n7 else None
    base = EngineConfig.from_env()
    if args.command == "oracle-check":
        return base.with_overrides(oracle_max_n=args.max_n, allow_n7=allow)
    return base.with_overrides(max_n=args.max_n, allow_n7=allow)


def _emit(args: argparse.Namespace, text: str, payload: object) -> None:
    print(render_json(payload) if args.format == "json" else text)


def _cmd_spectrum(args: argparse.Namespace, config: EngineConfig) -> int:
    rows = admissible_table(args.alpha, args.eta)
    spectrum = block_spectrum(args.alpha, args.eta)
    lines = [f"{tup}\tc={tup.coefficient}\tlambda={value}\tmult={tup.multiplicity()}" for tup, value in rows]
    lines.append(f"spectrum: {spectrum}")
    payload = {
        "alpha": list(args.alpha.parts),
        "eta": list(args.eta.eta.parts),
        "lambda_max": str(spectrum.max),
        "spectrum": spectrum.to_payload(),
        "tuples": [
            {
                "parts": [list(part.parts) for part in tup.parts],
                "coefficient": str(tup.coefficient),
                "eigenvalue": str(value),
            }
            for tup, value in rows
        ],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _cmd_lmax(args: argparse.Namespace, config: EngineConfig) -> int:
    value = lambda_max(args.alpha, args.eta)
    payload = {"alpha": list(args.alpha.parts), "eta": list(args.eta.eta.parts), "lambda_max": str(value)}
    _emit(args, str(value), payload)
    return EXIT_OK


def _cmd_gap(args: argparse.Namespace, config: EngineConfig) -> int:
    graph = spectral_gap_graph(args.eta)
    cayley = spectral_gap_cayley(args.eta, config)
    payload = {"eta": list(args.eta.eta.parts), "gap_graph": str(graph), "gap_cayley": str(cayley)}
    _emit(args, f"graph {graph}\ncayley {cayley}", payload)
    return EXIT_OK


def _read_batch(path: Path) -> List[MultipartiteShape]:
    shapes = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            shapes.append(MultipartiteShape(parse_partition(stripped)))
        except PartitionFormatError as exc:
            raise PartitionFormatError(f"--batch {path}:{number}: {exc}") from exc
    return shapes


def _cmd_aldous(args: argparse.Namespace, config: EngineConfig) -> int:
    shapes = _read_batch(args.batch) if args.batch is not None else [args.eta]
    reports: List[AldousReport] = [verify_aldous(shape, config) for shape in shapes]
    if args.save is not None:
        for report in reports:
            saved = save_report(report, args.save or config.output_dir)
            logger.info("saved %s and %s", saved.json_path, saved.text_path)
    payloads = [report.to_payload() for report in reports]
    text = "\n\n".join(format_report(report) for report in reports)
    _emit(args, text, payloads if args.batch is not None else payloads[0])
    return EXIT_OK if all(report.verdict for report in reports) else EXIT_FAILED


def _cmd_lr_coeff(args: argparse.Namespace, config: EngineConfig) -> int:
    value = lr_coefficient(args.alpha, args.beta, args.gamma)
    payload = {
        "alpha": list(args.alpha.parts),
        "beta": list(args.beta.parts),
        "gamma": list(args.gamma.parts),
        "coefficient": str(value),
    }
    _emit(args, str(value), payload)
    return EXIT_OK


def _cmd_lr_tableaux(args: argparse.Namespace, config: EngineConfig) -> int:
    shape = SkewShape(args.alpha, args.beta)
    found = enumerate_lr_tableaux(shape, args.gamma)
    blocks = [f"{tableau.render()}\ncontent {format_partition(tableau.content)}" for tableau in found]
    blocks.append(f"count: {len(found)}")
    payload = {
        "shape": str(shape),
        "count": len(found),
        "tableaux": [
            {
                "rows": [list(row) for row in tableau.rows],
                "reading_word": list(reading_word(tableau)),
                "content": list(tableau.content.parts),
            }
            for tableau in found
        ],
    }
    _emit(args, "\n\n".join(blocks), payload)
    return EXIT_OK


def _cmd_minimal_content(args: argparse.Namespace, config: EngineConfig) -> int:
    content = minimal_content(args.alpha, args.beta)
    outer, inner = reduce_equal_rows(args.alpha, args.beta)
    word = minimal_sequence(subtract(outer, inner))
    tableau = reconstruct_tableau(word, args.alpha, args.beta)
    text = "\n".join(
        [
            format_partition(content),
            "minimal sequence: " + " ".join(str(value) for value in word),
            tableau.render(),
        ]
    )
    payload = {
        "alpha": list(args.alpha.parts),
        "beta": list(args.beta.parts),
        "content": list(content.parts),
        "minimal_sequence": list(word),
        "rows": [list(row) for row in tableau.rows],
    }
    _emit(args, text, payload)
    return EXIT_OK


def _cmd_oracle_check(args: argparse.Namespace, config: EngineConfig) -> int:
    report = oracle_check(args.eta, args.alpha, config)
    lines = [f"shape: {report.shape}"]
    for block in report.blocks:
        status = "ok" if block.comparison.ok else "FAIL"
        lines.append(f"block {format_partition(block.alpha)}: {status} (worst {block.comparison.worst_deviation:.2e})")
    lines.append(f"graph laplacian: {'ok' if report.graph.ok and report.gap_ok else 'FAIL'}")
    if report.cayley is not None:
        lines.append(
            f"cayley laplacian: {'ok' if report.cayley.ok else 'FAIL'} (worst {report.cayley.worst_deviation:.2e})"
        )
    for item in report.skipped:
        lines.append(f"skipped: {item}")
    lines.append("passed" if report.passed else "FAILED")
    _emit(args, "\n".join(lines), report.to_payload())
    return EXIT_OK if report.passed else EXIT_FAILED


_COMMANDS: Dict[str, Callable[[argparse.Namespace, EngineConfig], int]] = {
    "spectrum": _cmd_spectrum,
    "lmax": _cmd_lmax,
    "gap": _cmd_gap,
    "aldous": _cmd_aldous,
    "lr-coeff": _cmd_lr_coeff,
    "lr-tableaux": _cmd_lr_tableaux,
    "minimal-content": _cmd_minimal_content,
    "oracle-check": _cmd_oracle_check,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch the subcommand and return the exit status."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        config = _config_for(args)
        return _COMMANDS[args.command](args, config)
    except (ConvergenceError, DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except (CayleySpectraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["EXIT_FAILED", "EXIT_OK", "EXIT_USAGE", "build_parser", "main", "run"]
