"""Matplotlib rendering of verification reports and claim tables to files.

Figures accompany the delimited reports when a figures directory is given on
the command line; everything is rendered headlessly (Agg) at fixed size so
report bundles build the same way on any machine.
"""

from __future__ import annotations

import math
import os


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def _as_float(v):
    try:
        f = float(v)
    except (TypeError, ValueError):
        return None
    if math.isnan(f) or math.isinf(f):
        return None
    return f


def render_table_figure(case_id: str, columns: list[str], rows: list[list],
                        path: str) -> str:
    """Plot the table's numeric columns against its point column."""
    plt = _plt()
    xs = [_as_float(r[0]) for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5), dpi=150)
    styles = {"value": dict(color="tab:blue", lw=1.6),
              "lower": dict(color="tab:green", lw=1.0, ls="--"),
              "upper": dict(color="tab:red", lw=1.0, ls="--"),
              "margin": dict(color="tab:gray", lw=1.0, ls=":")}
    plotted = False
    for j, name in enumerate(columns[1:], start=1):
        ys = [_as_float(r[j]) for r in rows]
        pairs = [(x, y) for x, y in zip(xs, ys) if x is not None and y is not None]
        if not pairs:
            continue
        px, py = zip(*pairs)
        ax.plot(px, py, label=name, **styles.get(name, dict(lw=1.2)))
        plotted = True
    if plotted:
        finite_x = [x for x in xs if x is not None and x > 0]
        if finite_x and max(finite_x) / max(min(finite_x), 1e-30) > 100:
            ax.set_xscale("log")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel(columns[0])
    ax.set_title(case_id)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def render_margins_figure(reports, path: str) -> str:
    """Summary bar chart of minimum margins per claim (log scale)."""
    plt = _plt()
    ids, margins, colors = [], [], []
    for r in reports:
        ids.append(r.id)
        m = _as_float(r.min_margin)
        margins.append(abs(m) if m is not None else 0.0)
        ok = r.verdict.value in ("verified", "consistent-with", "boundary_equality")
        colors.append("tab:green" if ok else "tab:red")
    fig, ax = plt.subplots(figsize=(max(6, 0.32 * len(ids)), 4.5), dpi=150)
    ax.bar(range(len(ids)), [max(m, 1e-300) for m in margins], color=colors)
    ax.set_yscale("log")
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=90, fontsize=7)
    ax.set_ylabel("minimum margin")
    ax.set_title("claim margins")
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def render_scan_figure(case_id: str, extras: dict, path: str) -> str:
    """Minimum margin per derivative order for each scanned grid."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7, 4.5), dpi=150)
    plotted = False
    for key, orders in extras.items():
        if not key.startswith("orders"):
            continue
        ks = sorted(int(k) for k in orders)
        ms = [_as_float(orders[k]["min_margin"]) for k in ks]
        pairs = [(k, m) for k, m in zip(ks, ms) if m is not None and m > 0]
        if not pairs:
            continue
        px, py = zip(*pairs)
        label = key[len("orders"):].strip("[]") or case_id
        ax.plot(px, py, marker="o", label=label)
        plotted = True
    if plotted:
        ax.set_yscale("log")
        ax.legend(loc="best", fontsize=8)
    ax.set_xlabel("derivative order")
    ax.set_ylabel("minimum margin on grid")
    ax.set_title(f"{case_id}: sign-pattern scan")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def render_search_figure(result: dict, path: str) -> str:
    """Per-dimension frontier of each searched constant."""
    plt = _plt()
    frontier = result.get("frontier", [])
    fig, axes = plt.subplots(2, 3, figsize=(11, 6), dpi=150)
    params = ("a", "lam", "alpha", "mu", "b", "beta")
    ns = [row["n"] for row in frontier]
    for ax, key in zip(axes.flat, params):
        ys = [_as_float(row[key]) for row in frontier]
        ax.plot(ns, ys, marker=".", lw=1.0)
        emp = _as_float(result["empirical"][key])
        if emp is not None:
            ax.axhline(emp, color="tab:red", lw=0.8, ls="--")
        ax.set_xscale("log")
        ax.set_title(key, fontsize=9)
        ax.grid(True, alpha=0.3)
    fig.suptitle("per-dimension admissible extremes (dashed: overall)")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def figure_path(directory: str, name: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, f"{name}.png")
