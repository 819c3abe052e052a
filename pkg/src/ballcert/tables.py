"""Per-point tables for registered claims.

Column order is deterministic: point, value(s), lower, upper, margin.
Sequence quantities are exponentiated here, at the report boundary, never
inside the evaluation modules.
"""

from __future__ import annotations

from typing import Optional

from . import ballfun as bf
from .checker import _grid_points, _Aggregate, check_case
from .claims import GridSpec, IntRange, Kind
from .realcore import DomainError, PrecisionContext
from .registry import DEFAULT_N_MAX, registry


def build_table(case_id: str, ctx: PrecisionContext,
                grid: Optional[GridSpec] = None,
                n_max: Optional[int] = None,
                n_default: int = DEFAULT_N_MAX) -> tuple[list[str], list[list]]:
    """(columns, rows) for one claim id."""
    reg = registry()
    if case_id not in reg:
        raise KeyError(f"unknown claim id: {case_id}")
    case = reg[case_id]

    if case.kind is Kind.LIMIT:
        report = check_case(case_id, ctx, grid=grid, n_max=n_max,
                            n_default=n_default)
        rows = []
        for entry in report.extras.get("limits", []):
            for row in entry["rows"]:
                rows.append([row["point"], row["raw"], row["level1"],
                             row["level2"], entry["target"]])
        return ["point", "value", "richardson1", "richardson2", "target"], rows

    table = case.payload.get("table")
    if isinstance(case.domain, IntRange):
        ns = case.domain.resolve(n_max, min(n_default, 1000))
        cache = bf.sequence_cache(ctx)
        cache.ensure(min(max(ns) + 6, bf.MAX_DIMENSION))
        rows = []
        if table:
            for n in ns:
                value = table["value"](n, cache)
                lower = table["lower"](n, cache)
                upper = table["upper"](n, cache)
                margin = min(value - lower, upper - value)
                rows.append([n, value, lower, upper, margin])
            return ["point", "value", "lower", "upper", "margin"], rows
        sides = _collect_sides(case)
        cols = ["point"] + [name for name, _, _ in sides] + ["margin"]
        for n in ns:
            gaps = [fn(n, cache, None) for _, fn, _ in sides]
            rows.append([n] + gaps + [min(gaps)])
        return cols, rows

    # grid domain
    sides = _collect_sides(case)
    agg = _Aggregate(case, ctx)
    use_grid = grid or (case.domain if isinstance(case.domain, GridSpec) else None)
    pts = _grid_points(agg, use_grid, case, ctx) if use_grid else []
    rows = []
    if table:
        for x in pts:
            value = table["value"](x, ctx)
            lower = table["lower"](x, ctx)
            upper = table["upper"](x, ctx)
            rows.append([x, value, lower, upper, min(value - lower, upper - value)])
        return ["point", "value", "lower", "upper", "margin"], rows
    if sides:
        cols = ["point"] + [name for name, _, _ in sides] + ["margin"]
        for x in pts:
            gaps = []
            for _, fn, _ in sides:
                try:
                    gaps.append(fn(x, ctx))
                except DomainError:
                    gaps.append(None)
            present = [g for g in gaps if g is not None]
            rows.append([x] + gaps + [min(present) if present else None])
        return cols, rows

    # fall back to the report's margin view
    report = check_case(case_id, ctx, grid=grid, n_max=n_max, n_default=n_default)
    rows = [[report.id, report.verdict.value, report.min_margin,
             report.witness, report.bits_used]]
    return ["id", "verdict", "min_margin", "witness", "bits_used"], rows


def _collect_sides(case):
    sides = []
    for section in case.payload.get("sections", []):
        if section["type"] in ("seq_sides", "grid_sides"):
            sides.extend(section["sides"])
    return sides
