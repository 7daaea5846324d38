"""Output encoders for the batch CLI: JSON documents, CSV slope tables and text reports."""

from __future__ import annotations

import csv
import io
from enum import Enum
from typing import Any

from tools.common import encode_json_response

SLOPE_COLUMNS = (
    "slope",
    "norm",
    "norm_kind",
    "singular_lower",
    "singular_upper",
    "singular_exact",
    "genus_upper",
    "norm_not_realized_by_singular_genus",
    "errors",
)


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    SVG = "svg"
    TEXT = "text"


def render_json(payload: dict[str, Any]) -> str:
    """Indented, key-sorted JSON with a trailing newline; identical input gives identical bytes."""
    return encode_json_response(payload, indent=2) + "\n"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def slope_row_cells(row: dict[str, Any]) -> list[str]:
    """Flatten one slope row (torus-norm or satellite report) into ``SLOPE_COLUMNS`` order."""
    x, y = row["slope"]
    norm = row.get("norm") or {}
    singular = row.get("singular_genus") or {}
    errors = row.get("errors") or {}
    cells = {
        "slope": f"{x}/{y}",
        "norm": norm.get("value"),
        "norm_kind": norm.get("kind"),
        "singular_lower": singular.get("lower"),
        "singular_upper": singular.get("upper"),
        "singular_exact": singular.get("exact"),
        "genus_upper": row.get("genus_upper"),
        "norm_not_realized_by_singular_genus": row.get("norm_not_realized_by_singular_genus"),
        "errors": "; ".join(f"{name}: {errors[name]}" for name in sorted(errors)),
    }
    return [_cell(cells[column]) for column in SLOPE_COLUMNS]


def _verdict_text(verdict: dict[str, Any]) -> str:
    conclusion = verdict["conclusion"]
    if "index" in verdict:
        conclusion = f"{conclusion}({verdict['index']})"
    return f"{verdict['subject']}: {conclusion} [{verdict['justification']['tag']}]"


def render_csv(rows: list[dict[str, Any]], verdict: dict[str, Any] | None = None) -> str:
    """Header row, one row per slope and, for slope ranges, a final index-bound row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(SLOPE_COLUMNS)
    for row in rows:
        writer.writerow(slope_row_cells(row))
    if verdict is not None:
        writer.writerow(["index_lower_bound", _verdict_text(verdict)] + [""] * (len(SLOPE_COLUMNS) - 2))
    return buffer.getvalue()


def render_table(rows: list[dict[str, Any]], verdict: dict[str, Any] | None = None) -> str:
    """Fixed-width table of slope rows, empty columns dropped."""
    body = [slope_row_cells(row) for row in rows]
    keep = [i for i, column in enumerate(SLOPE_COLUMNS) if column == "slope" or any(cells[i] for cells in body)]
    table = [[SLOPE_COLUMNS[i] for i in keep]] + [[cells[i] for i in keep] for cells in body]
    widths = [max(len(line[i]) for line in table) for i in range(len(keep))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in table]
    if verdict is not None:
        lines.append("")
        lines.append(_verdict_text(verdict))
    return "\n".join(lines) + "\n"


def _flatten(prefix: str, value: Any, lines: list[str]) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else key, value[key], lines)
    elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
        for i, item in enumerate(value):
            _flatten(f"{prefix}[{i}]", item, lines)
    else:
        lines.append(f"{prefix}: {encode_json_response(value) if isinstance(value, list) else _cell(value)}")


def render_text(payload: dict[str, Any]) -> str:
    """Human-readable report: verdicts first as one-liners, then every field as ``path: value``."""
    lines = [_verdict_text(verdict) for verdict in payload.get("verdicts", [])]
    if lines:
        lines.append("")
    _flatten("", payload, lines)
    return "\n".join(lines) + "\n"
