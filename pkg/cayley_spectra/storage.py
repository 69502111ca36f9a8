"""Persistence helpers for reports and oracle matrices."""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ShapeError
from .models import AldousReport, render_json
from .oracle import DenseSymmetricMatrix
from .partitions import format_partition

_ORDER = np.dtype("<u8")
_ENTRY = np.dtype("<f8")


def ensure_directory(path: str | Path) -> Path:
    """Ensure a directory exists and return it as a :class:`Path`."""

    directory = Path(path)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def format_report(report: AldousReport) -> str:
    """Return a human readable rendering of an Aldous check."""

    lines = [
        f"shape: {report.shape}  n={report.n}  |E|={report.edge_count}",
        f"gap graph:  {report.gap_graph} (multiplicity {report.gap_multiplicity_graph})",
        f"gap cayley: {report.gap_cayley} (multiplicity {report.gap_multiplicity_cayley})",
        f"verdict: {'true' if report.verdict else 'false'}  strict: {'true' if report.strict else 'false'}",
        f"route: {report.route}  chain verified: {'true' if report.chain_verified else 'false'}",
        "argmax: " + " ".join(format_partition(alpha) for alpha in report.argmax),
        "",
        "alpha\tlambda_max\tb_bar\tspectrum",
    ]
    for block in report.per_alpha:
        b_bar = "-" if block.b_bar is None else str(block.b_bar)
        lines.append(f"{format_partition(block.alpha)}\t{block.lambda_max}\t{b_bar}\t{block.spectrum}")
    return "\n".join(lines)


@dataclass(frozen=True)
class SavedReport:
    """Paths to the files written for one Aldous check."""

    json_path: Path
    text_path: Path


def save_report(report: AldousReport, output_dir: str | Path | None = None) -> SavedReport:
    """Persist the JSON payload and the text rendering into timestamped files."""

    directory = ensure_directory(output_dir or "cayley_outputs")
    timestamp = _dt.datetime.now(_dt.timezone.utc).strftime("%Y%m%dT%H%M%SZ")
    stem = f"aldous_{report.shape.label().replace(',', '-')}_{timestamp}"

    json_path = directory / f"{stem}.json"
    json_path.write_text(render_json(report.to_payload()) + "\n", encoding="utf-8")
    text_path = directory / f"{stem}.txt"
    text_path.write_text(format_report(report) + "\n", encoding="utf-8")

    return SavedReport(json_path=json_path, text_path=text_path)


def dump_matrix(matrix: DenseSymmetricMatrix, path: str | Path) -> Path:
    """Write ``order`` as little-endian uint64, then the entries as row-major little-endian float64."""

    target = Path(path)
    header = np.array([matrix.order], dtype=_ORDER).tobytes()
    body = np.ascontiguousarray(matrix.entries, dtype=_ENTRY).tobytes(order="C")
    target.write_bytes(header + body)
    return target


def load_matrix(path: str | Path) -> DenseSymmetricMatrix:
    data = Path(path).read_bytes()
    if len(data) < _ORDER.itemsize:
        raise ShapeError(f"{path} is too short for a matrix header")
    order = int(np.frombuffer(data[: _ORDER.itemsize], dtype=_ORDER)[0])
    expected = _ORDER.itemsize + order * order * _ENTRY.itemsize
    if len(data) != expected:
        raise ShapeError(f"{path} holds {len(data)} bytes, expected {expected} for order {order}")
    entries = np.frombuffer(data[_ORDER.itemsize:], dtype=_ENTRY).reshape(order, order)
    return DenseSymmetricMatrix(entries.astype(np.float64))


__all__ = [
    "SavedReport",
    "dump_matrix",
    "ensure_directory",
    "format_report",
    "load_matrix",
    "save_report",
]
