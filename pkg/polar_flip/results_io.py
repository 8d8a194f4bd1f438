"""CSV output of sweep results and Eb/N0 gap comparison between runs."""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from .exceptions import ConfigurationError, CurveRangeError
from .models.results import CSV_HEADER, GapReport, SweepRow

__all__ = ["rows_to_csv", "emit_csv", "read_csv", "interpolate_ebn0", "compare_runs"]

RowsOrPath = Union[str, Path, Sequence[SweepRow]]


def _format(value) -> str:
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    """CSV text of ``rows`` under the standard header; floats keep 10 significant digits."""
    if not rows:
        raise ConfigurationError("No sweep rows to write")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        values = row.to_dict()
        writer.writerow([_format(values[column]) for column in CSV_HEADER])
    return buffer.getvalue()


def emit_csv(rows: Sequence[SweepRow], path: Union[str, Path]) -> Path:
    """Write ``rows`` to ``path`` as produced by :func:`rows_to_csv`."""
    path = Path(path)
    path.write_text(rows_to_csv(rows), encoding="utf-8")
    return path


def read_csv(path: Union[str, Path]) -> List[SweepRow]:
    """Parse a file written by :func:`emit_csv`."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        missing = set(CSV_HEADER) - set(reader.fieldnames or ())
        if missing:
            raise ConfigurationError(f"{path} lacks columns {sorted(missing)}", {"path": str(path)})
        try:
            return [SweepRow.from_dict(record) for record in reader]
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"Malformed row in {path}: {exc}", {"path": str(path)}) from exc


def _curve(rows: Sequence[SweepRow]) -> List[Tuple[float, float]]:
    return sorted((row.ebn0_db, math.log10(row.fer)) for row in rows if row.fer > 0)


def interpolate_ebn0(rows: Sequence[SweepRow], target_fer: float) -> float:
    """Eb/N0 at which the curve reaches ``target_fer`` (linear in log10 FER).

    Points with zero FER are ignored; the first crossing in Eb/N0 order wins.
    """
    if target_fer <= 0:
        raise CurveRangeError(f"Target FER must be positive, got {target_fer}")
    target = math.log10(target_fer)
    curve = _curve(rows)
    for (x0, y0), (x1, y1) in zip(curve, curve[1:]):
        if min(y0, y1) <= target <= max(y0, y1):
            if y0 == y1:
                return x0
            return x0 + (target - y0) * (x1 - x0) / (y1 - y0)
    if len(curve) == 1 and curve[0][1] == target:
        return curve[0][0]
    span = (min(y for _, y in curve), max(y for _, y in curve)) if curve else None
    raise CurveRangeError(
        f"FER {target_fer:g} is outside the curve",
        {"target_fer": target_fer, "log10_fer_range": span},
    )


def _rows(source: RowsOrPath) -> List[SweepRow]:
    if isinstance(source, (str, Path)):
        return read_csv(source)
    return list(source)


def _label(source: RowsOrPath) -> Optional[str]:
    return str(source) if isinstance(source, (str, Path)) else None


def compare_runs(baseline: RowsOrPath, candidate: RowsOrPath, target_fer: float = 1e-3) -> GapReport:
    """Eb/N0 gap (candidate - baseline) at ``target_fer``."""
    return GapReport(
        target_fer=target_fer,
        baseline_ebn0_db=interpolate_ebn0(_rows(baseline), target_fer),
        candidate_ebn0_db=interpolate_ebn0(_rows(candidate), target_fer),
        baseline_label=_label(baseline),
        candidate_label=_label(candidate),
    )
