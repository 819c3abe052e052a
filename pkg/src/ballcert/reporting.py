"""Report serialization: JSON, CSV and plain text, precision-faithfully.

Numeric fields are rendered as decimal strings (not binary floats) so that a
report never loses precision information and two runs of the same
configuration are byte-identical. The report header repeats every default
that influenced the run.
"""

from __future__ import annotations

import csv
import io
import json

import mpmath

from .claims import CheckReport, Verdict

REPORT_DIGITS = 30
SCHEMA_VERSION = 1


def decimal_str(value, digits: int = REPORT_DIGITS):
    """Decimal rendering of a numeric value; passes ints and None through."""
    if value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        value = mpmath.mpf(value)
    if mpmath.isnan(value):
        return "nan"
    if value == mpmath.inf:
        return "inf"
    if value == mpmath.ninf:
        return "-inf"
    return mpmath.nstr(value, digits)


def jsonable(obj):
    """Recursively convert a result structure to JSON-ready primitives."""
    return _jsonable(obj)


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Verdict):
        return obj.value
    if isinstance(obj, float):
        return decimal_str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "_mpf_"):
        return decimal_str(obj)
    if hasattr(obj, "__dict__"):
        return {k: _jsonable(v) for k, v in vars(obj).items()}
    return str(obj)


def report_to_dict(report: CheckReport) -> dict:
    """The pinned report schema plus structured extras."""
    return {
        "id": report.id,
        "verdict": report.verdict.value,
        "min_margin": decimal_str(report.min_margin),
        "witness": _jsonable(report.witness),
        "bits_used": report.bits_used,
        "grid": _jsonable(report.grid),
        "anchor": report.anchor,
        "boundary": _jsonable(report.boundary),
        "excluded_count": len(report.excluded),
        "notes": list(report.notes),
        "extras": _jsonable(report.extras),
    }


def run_header(ctx, n_max, grid, ids, command: str) -> dict:
    return {
        "tool": "ballcert",
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "bits": ctx.bits,
        "max_bits": ctx.max_bits,
        "n_max": n_max,
        "grid_override": _jsonable(grid.to_dict()) if grid is not None else None,
        "default_n_max": 100000,
        "default_function_grid": {"start": 0.01, "end": 200,
                                  "count": 2048, "spacing": "log"},
        "ids": list(ids),
    }


def render_json(header: dict, reports: list[CheckReport]) -> str:
    doc = {"header": header, "reports": [report_to_dict(r) for r in reports]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_text(header: dict, reports: list[CheckReport]) -> str:
    lines = [f"# ballcert {header['command']}  bits={header['bits']}"
             f" max_bits={header['max_bits']} n_max={header['n_max']}"]
    for r in reports:
        margin = decimal_str(r.min_margin, 8)
        lines.append(f"{r.id}: {r.verdict.value}"
                     f" (min_margin={margin}, witness={_jsonable(r.witness)},"
                     f" bits={r.bits_used})")
        for side, point in r.boundary:
            lines.append(f"  boundary equality on '{side}' at {_jsonable(point)}")
        for note in r.notes:
            lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n"


def render_csv(header: dict, reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(["id", "verdict", "min_margin", "witness", "bits_used",
                     "grid", "anchor"])
    for r in reports:
        writer.writerow([
            r.id, r.verdict.value, decimal_str(r.min_margin),
            _jsonable(r.witness), r.bits_used,
            json.dumps(_jsonable(r.grid), sort_keys=True), r.anchor,
        ])
    return buf.getvalue()


def render_table_csv(columns: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_table_text(columns: list[str], rows: list[list]) -> str:
    out = ["\t".join(columns)]
    for row in rows:
        out.append("\t".join(str(_cell(v)) for v in row))
    return "\n".join(out) + "\n"


def render_table_json(header: dict, columns: list[str], rows: list[list]) -> str:
    doc = {"header": header, "columns": columns,
           "rows": [[_cell(v) for v in row] for row in rows]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cell(v):
    if v is None or isinstance(v, (int, str)):
        return v
    return decimal_str(v, 12)
