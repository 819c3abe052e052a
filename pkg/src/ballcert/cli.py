"""Batch command-line interface: verify | table | scan | search | registry.

Exit codes: 0 all claims verified (boundary equalities on non-strict sides
included), 1 any counterexample or refuted scan, 2 any inconclusive sign,
64 usage error, 74 output I/O failure. All defaults are echoed into the
report header, and identical invocations produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from .claims import GridSpec, Verdict
from .realcore import DomainError, new_context
from .registry import DEFAULT_N_MAX, registry
from . import checker, reporting, tables

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64
EXIT_IO = 74

SEARCH_ID = "EQ27_OPEN"


@dataclass
class RunConfig:
    bits: int
    max_bits: int
    ids: list[str]
    grid: Optional[GridSpec] = None
    n_max: Optional[int] = None
    fmt: str = "text"
    out: Optional[str] = None
    figures: Optional[str] = None
    max_order: Optional[int] = None


def _default_bits() -> int:
    env = os.environ.get("BALLCERT_PREC")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"BALLCERT_PREC must be an integer, got {env!r}")
    return 256


def _usage(msg: str) -> int:
    print(f"ballcert: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise ValueError("grid must be start:end:count[:log|:linear]")
    start, end, count = float(parts[0]), float(parts[1]), int(parts[2])
    spacing = parts[3] if len(parts) == 4 else "log"
    return GridSpec(start, end, count, spacing)


def _resolve_ids(raw: list[str]) -> list[str]:
    reg = registry()
    wanted = []
    for chunk in raw:
        wanted.extend(x for x in chunk.split(",") if x)
    if not wanted or "all" in wanted:
        return list(reg)
    unknown = [x for x in wanted if x not in reg]
    if unknown:
        raise KeyError(", ".join(unknown))
    # output order follows the registry, independent of request order
    wanted_set = set(wanted)
    return [cid for cid in reg if cid in wanted_set]


def _emit(text: str, out: Optional[str]) -> int:
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        parent = os.path.dirname(os.path.abspath(out))
        os.makedirs(parent, exist_ok=True)
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as err:
        print(f"ballcert: cannot write {out}: {err}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _exit_code(reports) -> int:
    verdicts = [r.verdict for r in reports]
    if any(v.is_failure for v in verdicts):
        return EXIT_COUNTEREXAMPLE
    if any(v is Verdict.INCONCLUSIVE for v in verdicts):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _run_checks(cfg: RunConfig, command: str) -> int:
    ctx = new_context(cfg.bits, cfg.max_bits)
    # an explicit n_max on a single id overrides that claim's window; on
    # multi-id runs it only resolves the open-ended sequence domains
    single = len(cfg.ids) == 1
    params = {"max_order": cfg.max_order} if cfg.max_order else None
    reports = []
    for cid in cfg.ids:
        kwargs = {"grid": cfg.grid, "params": params}
        if cfg.n_max is not None:
            if single:
                kwargs["n_max"] = cfg.n_max
            else:
                kwargs["n_default"] = cfg.n_max
        reports.append(checker.check_case(cid, ctx, **kwargs))
    header = reporting.run_header(ctx, cfg.n_max, cfg.grid, cfg.ids, command)
    if cfg.fmt == "json":
        text = reporting.render_json(header, reports)
    elif cfg.fmt == "csv":
        text = reporting.render_csv(header, reports)
    else:
        text = reporting.render_text(header, reports)
    status = _emit(text, cfg.out)
    if status:
        return status
    if cfg.figures:
        from . import figures
        try:
            figures.render_margins_figure(
                reports, figures.figure_path(cfg.figures, f"{command}_margins"))
            for r in reports:
                if any(k.startswith("orders") for k in r.extras):
                    figures.render_scan_figure(
                        r.id, r.extras, figures.figure_path(cfg.figures, r.id))
        except OSError as err:
            print(f"ballcert: cannot write figures: {err}", file=sys.stderr)
            return EXIT_IO
    return _exit_code(reports)


def _cmd_verify(cfg: RunConfig) -> int:
    return _run_checks(cfg, "verify")


def _scan_capable(case) -> bool:
    return any(s["type"] == "scan" for s in case.payload.get("sections", []))


def _cmd_scan(cfg: RunConfig, explicit_ids: bool) -> int:
    reg = registry()
    if not explicit_ids:
        cfg.ids = [cid for cid in reg if _scan_capable(reg[cid])]
    else:
        bad = [cid for cid in cfg.ids if not _scan_capable(reg[cid])]
        if bad:
            return _usage(f"scan only drives derivative-sign cases; not:"
                          f" {', '.join(bad)}")
    if cfg.max_order is not None and not 1 <= cfg.max_order <= 8:
        return _usage("max order is capped at 8 (higher orders require the"
                      " escalation opt-in)")
    return _run_checks(cfg, "scan")


def _cmd_table(cfg: RunConfig) -> int:
    if len(cfg.ids) != 1:
        return _usage("table needs exactly one --id")
    ctx = new_context(cfg.bits, cfg.max_bits)
    cid = cfg.ids[0]
    columns, rows = tables.build_table(cid, ctx, grid=cfg.grid, n_max=cfg.n_max)
    header = reporting.run_header(ctx, cfg.n_max, cfg.grid, [cid], "table")
    if cfg.fmt == "json":
        text = reporting.render_table_json(header, columns, rows)
    elif cfg.fmt == "csv":
        text = reporting.render_table_csv(columns, rows)
    else:
        text = reporting.render_table_text(columns, rows)
    status = _emit(text, cfg.out)
    if status:
        return status
    if cfg.figures:
        from . import figures
        try:
            figures.render_table_figure(
                cid, columns, rows, figures.figure_path(cfg.figures, cid))
        except OSError as err:
            print(f"ballcert: cannot write figures: {err}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def _cmd_search(cfg: RunConfig) -> int:
    if cfg.ids and cfg.ids != [SEARCH_ID]:
        return _usage(f"search drives the open problem; use --id {SEARCH_ID}")
    ctx = new_context(cfg.bits, cfg.max_bits)
    n_max = cfg.n_max if cfg.n_max is not None else 1000
    try:
        result = checker.search_open27(n_max, ctx)
    except DomainError as err:
        return _usage(str(err))
    header = reporting.run_header(ctx, n_max, None, [SEARCH_ID], "search")
    feas = result["feasible_instance"]
    lines = [
        f"# ballcert search  bits={ctx.bits} n_max={n_max}",
        "feasible instance (alpha=2, lambda=1, a=3 | beta=4, mu=1, b=3): "
        + ("feasible" if feas["algebraic_identity"] and feas["matches_band_case"]
           else "NOT feasible"),
        f"  algebraic identity 1 - 1/(n+3) = (n+2)/(n+3): {feas['algebraic_identity']}",
        f"  reproduces the one-step band bounds: {feas['matches_band_case']}",
        f"  minimum band margin: {reporting.decimal_str(feas['min_margin'], 10)}"
        f" at n={feas['witness']}",
        "empirical extremes (per-parameter, others at the feasible instance;"
        " not proofs):",
    ]
    for key in ("a", "lam", "alpha", "mu", "b", "beta"):
        val, n_bind = result["binding"][key]
        lines.append(f"  {key}: {reporting.decimal_str(result['empirical'][key], 12)}"
                     f"  (binding dimension n={n_bind})")
    text = "\n".join(lines) + "\n"
    if cfg.fmt == "json":
        import json
        doc = {"header": header, "search": reporting.jsonable(result)}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "csv":
        cols = ["n", "a", "lam", "alpha", "mu", "b", "beta"]
        rows = [[row["n"]] + [row[k] for k in cols[1:]] for row in result["frontier"]]
        text = reporting.render_table_csv(cols, rows)
    status = _emit(text, cfg.out)
    if status:
        return status
    if cfg.figures:
        from . import figures
        try:
            figures.render_search_figure(
                result, figures.figure_path(cfg.figures, SEARCH_ID))
        except OSError as err:
            print(f"ballcert: cannot write figures: {err}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK


def _cmd_registry(cfg: RunConfig) -> int:
    reg = registry()
    if cfg.fmt == "json":
        import json
        doc = [{"id": c.id, "kind": c.kind.value, "strictness": c.strictness,
                "conjecture": c.conjecture, "anchor": c.anchor}
               for c in reg.values()]
        return _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", cfg.out)
    lines = [f"{c.id:26s} {c.kind.value:18s} "
             f"{'conjecture' if c.conjecture else 'claim':10s} {c.anchor}"
             for c in reg.values()]
    return _emit("\n".join(lines) + "\n", cfg.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballcert",
        description="Verify gamma-function and unit-ball-volume claims with"
                    " strict-sign margins and reproducible reports.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, href in (("verify", "run claim checks"),
                       ("table", "emit a per-point table for one claim"),
                       ("scan", "run conjecture derivative-sign scans"),
                       ("search", "empirical sharp-constant search"),
                       ("registry", "list registered claims")):
        p = sub.add_parser(name, help=href)
        p.add_argument("--id", action="append", default=[],
                       help="claim id, comma list, or 'all'")
        p.add_argument("--n-max", type=int, default=None,
                       help="sequence-domain end; on a single id this overrides"
                            " the claim's own window")
        p.add_argument("--grid", type=str, default=None,
                       help="grid override start:end:count[:log|:linear],"
                            " clipped to each claim's validity window")
        p.add_argument("--prec", type=int, default=None,
                       help="working precision in bits (default 256; env"
                            " BALLCERT_PREC overrides the default)")
        p.add_argument("--max-prec", type=int, default=None,
                       help="escalation ceiling in bits (default 4096)")
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--out", type=str, default=None,
                       help="write the report to this path instead of stdout")
        p.add_argument("--figures", type=str, default=None,
                       help="also render figures into this directory")
        if name == "scan":
            p.add_argument("--max-order", type=int, default=None,
                           help="highest derivative order to scan (<= 8)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; the contract is 64
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        bits = args.prec if args.prec is not None else _default_bits()
        max_bits = args.max_prec if args.max_prec is not None else max(4096, bits)
        new_context(bits, max_bits)
    except ValueError as err:
        return _usage(str(err))
    grid = None
    if args.grid:
        try:
            grid = _parse_grid(args.grid)
        except (ValueError, DomainError) as err:
            return _usage(f"bad --grid: {err}")
    try:
        if args.command == "search":
            ids = [SEARCH_ID] if not args.id else _resolve_ids(args.id)
        else:
            ids = _resolve_ids(args.id)
    except KeyError as err:
        return _usage(f"unknown claim id: {err.args[0]}")
    cfg = RunConfig(bits=bits, max_bits=max_bits, ids=ids, grid=grid,
                    n_max=args.n_max, fmt=args.format, out=args.out,
                    figures=args.figures,
                    max_order=getattr(args, "max_order", None))
    if args.command == "scan":
        return _cmd_scan(cfg, explicit_ids=bool(args.id) and "all" not in
                         ",".join(args.id).split(","))
    commands = {
        "verify": _cmd_verify,
        "table": _cmd_table,
        "search": _cmd_search,
        "registry": _cmd_registry,
    }
    return commands[args.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
