"""
CSV, JSON and chart output for the command line.

CSV follows RFC 4180: a header row, CRLF line endings, and floats with a
fixed number of significant digits so that bodies are byte-stable per seed.
"""

import csv
import hashlib
import io
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, TextIO, Union

from loguru import logger
from pydantic import BaseModel

from app import __version__
from app.core.config import settings
from app.core.exceptions import ConfigurationError
from app.models.results import RunManifest

Row = Union[Mapping[str, Any], BaseModel]


def format_value(value: Any, digits: Optional[int] = None) -> str:
    digits = settings.csv_significant_digits if digits is None else digits
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def _as_dict(row: Row) -> Mapping[str, Any]:
    return row.model_dump() if isinstance(row, BaseModel) else row


def csv_text(rows: Iterable[Row], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        record = _as_dict(row)
        writer.writerow([format_value(record[c]) for c in columns])
    return buffer.getvalue()


def emit_csv(
    rows: Iterable[Row],
    columns: Sequence[str],
    path: Optional[Union[str, Path]] = None,
    stream: Optional[TextIO] = None,
) -> Optional[Path]:
    """Write ``rows`` as CSV to ``path``, or to ``stream`` (stdout) when no path is given."""
    text = csv_text(rows, columns)
    if path is None:
        (stream or sys.stdout).write(text)
        return None
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    logger.info("Wrote {}", path)
    return path


def file_digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


def write_run_manifest(
    directory: Union[str, Path],
    argv: List[str],
    seed: Optional[int],
    outputs: Iterable[Union[str, Path]],
    started_at: datetime,
    name: str = "run.json",
) -> Path:
    """Provenance record with the SHA-256 digest of every output file."""
    directory = Path(directory)
    digests: Dict[str, str] = {Path(p).name: file_digest(p) for p in outputs}
    manifest = RunManifest(
        command=list(argv),
        seed=seed,
        version=__version__,
        started_at=started_at,
        finished_at=utc_now(),
        outputs=digests,
    )
    path = directory / name
    path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info("Wrote run manifest {}", path)
    return path


def write_svg(
    rows: Iterable[Row],
    x: str,
    ys: Sequence[str],
    path: Union[str, Path],
    title: str = "",
) -> Path:
    """Line chart of the per-x mean of each column in ``ys``."""
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError as e:
        raise ConfigurationError(
            "SVG output needs matplotlib; install the 'plot' extra"
        ) from e

    grouped: Dict[Any, Dict[str, List[float]]] = {}
    for row in rows:
        record = _as_dict(row)
        bucket = grouped.setdefault(record[x], {y: [] for y in ys})
        for y in ys:
            bucket[y].append(float(record[y]))
    xs = sorted(grouped)

    fig, ax = plt.subplots(figsize=(6, 4))
    for y in ys:
        means = [sum(grouped[k][y]) / len(grouped[k][y]) for k in xs]
        ax.plot(xs, means, marker="o", label=y)
    ax.set_xlabel(x)
    ax.set_title(title)
    ax.legend()
    path = Path(path)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info("Wrote chart {}", path)
    return path
