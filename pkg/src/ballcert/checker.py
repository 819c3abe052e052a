"""Generic claim checker, conjecture scanner, constant search, extrapolation.

check_case runs a registered claim's payload sections over its domain and
aggregates per-point sign certificates into one CheckReport. Strict claims
require a Positive margin at every point; a single Negative yields a
counterexample with witness; an exact boundary on a non-strict side is
flagged boundary_equality without failing the claim. Identical inputs
produce identical reports: grids, escalation, and aggregation are all
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

from . import ballfun as bf
from . import jets as J
from .claims import (
    CheckReport,
    ClaimCase,
    GridSpec,
    IntRange,
    OpenProblemParams,
    Verdict,
)
from .claims import Kind
from .realcore import (
    DomainError,
    PrecisionContext,
    Sign,
    mpctx,
    sign_with_margin,
)
from .registry import DEFAULT_N_MAX, registry


def exclusion_radius(ctx: PrecisionContext):
    """Radius around singular points that grid checks must avoid: 2^(-bits/4)."""
    return mpctx(ctx.bits).ldexp(1, -(ctx.bits // 4))


class _Aggregate:
    """Accumulates per-point sign certificates into one report."""

    def __init__(self, case: ClaimCase, ctx: PrecisionContext):
        self.case = case
        self.ctx = ctx
        self.min_margin = None
        self.witness = None
        self.bits_used = ctx.bits
        self.boundary: list = []
        self.violations: list = []
        self.inconclusive: list = []
        self.excluded: list = []
        self.notes: list = []
        self.extras: dict = {}
        self._thresh_base = mpctx(ctx.bits).ldexp(1, 6 - ctx.bits)

    def gap(self, side: str, point, value, strict: bool,
            thunk: Callable[[PrecisionContext], object]) -> None:
        """Certify one gap that the claim requires to be positive."""
        base = self._thresh_base
        a = abs(value)
        thresh = base if a <= 1 else base * a
        if value > thresh:
            self._margin(a, point)
            return
        verdict = sign_with_margin(value, self.ctx, thunk)
        self.bits_used = max(self.bits_used, verdict.bits_used)
        if verdict.sign is Sign.POSITIVE:
            self._margin(verdict.margin, point)
        elif verdict.sign is Sign.NEGATIVE:
            self.violations.append((side, point, verdict.margin))
        elif strict:
            self.inconclusive.append((side, point))
        else:
            self.boundary.append((side, point))

    def _margin(self, margin, point) -> None:
        if self.min_margin is None or margin < self.min_margin:
            self.min_margin = margin
            self.witness = point

    def exclude(self, point, why: str) -> None:
        self.excluded.append((point, why))

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def report(self, grid_dict: dict) -> CheckReport:
        if self.violations:
            verdict = Verdict.REFUTED if self.case.conjecture else Verdict.COUNTEREXAMPLE
            side, point, margin = self.violations[0]
            self.note(f"violated side: {side}")
            return CheckReport(
                id=self.case.id, verdict=verdict, min_margin=-margin,
                witness=point, bits_used=self.bits_used, grid=grid_dict,
                anchor=self.case.anchor, boundary=self.boundary,
                excluded=self.excluded, notes=self.notes, extras=self.extras)
        if self.inconclusive:
            side, point = self.inconclusive[0]
            self.note(f"sign not certified at precision ceiling on side: {side}")
            return CheckReport(
                id=self.case.id, verdict=Verdict.INCONCLUSIVE,
                min_margin=self.min_margin, witness=point,
                bits_used=self.bits_used, grid=grid_dict,
                anchor=self.case.anchor, boundary=self.boundary,
                excluded=self.excluded, notes=self.notes, extras=self.extras)
        verdict = Verdict.CONSISTENT_WITH if self.case.conjecture else Verdict.VERIFIED
        return CheckReport(
            id=self.case.id, verdict=verdict, min_margin=self.min_margin,
            witness=self.witness, bits_used=self.bits_used, grid=grid_dict,
            anchor=self.case.anchor, boundary=self.boundary,
            excluded=self.excluded, notes=self.notes, extras=self.extras)


def _clip_grid(override: GridSpec, default: Optional[GridSpec]) -> Optional[GridSpec]:
    """Override resolution/extent without leaving the claim's validity window."""
    if default is None:
        return override
    start = max(override.start, default.start)
    end = min(override.end, default.end)
    if not start < end:
        return None
    spacing = override.spacing
    if spacing == "log" and start <= 0:
        spacing = "linear"
    return GridSpec(start, end, override.count, spacing)


def _grid_points(agg: _Aggregate, grid: GridSpec, case: ClaimCase,
                 ctx: PrecisionContext) -> list:
    pts = grid.points(ctx.bits + 16)
    if not case.singular_points:
        return pts
    radius = exclusion_radius(ctx)
    m = mpctx(ctx.bits + 16)
    keep = []
    for x in pts:
        dropped = False
        for s in case.singular_points:
            if abs(x - m.convert(s)) <= radius:
                agg.exclude(x, f"within 2^-{ctx.bits // 4} of singular point {s}")
                dropped = True
                break
        if not dropped:
            keep.append(x)
    return keep


# ---------------------------------------------------------------------------
# Section runners

def _run_grid_sides(agg, case, section, grid, ctx):
    pts = _grid_points(agg, grid, case, ctx)
    for name, fn, strict in section["sides"]:
        for x in pts:
            try:
                val = fn(x, ctx)
            except DomainError as err:
                agg.exclude(x, f"{name}: {err}")
                continue
            agg.gap(name, x, val, strict,
                    lambda c2, fn=fn, x=x: fn(x, c2))


def _run_seq_sides(agg, case, section, ns, ctx, params):
    cache = bf.sequence_cache(ctx)
    if ns:
        cache.ensure(min(max(ns) + 6, bf.MAX_DIMENSION))
    for name, fn, strict in section["sides"]:
        for n in ns:
            val = fn(n, cache, params)
            agg.gap(name, n, val, strict,
                    lambda c2, fn=fn, n=n: fn(n, bf.sequence_cache(c2), params))


def _run_box(agg, case, section, ctx):
    for name, fn, strict in section["sides"]:
        for pt in section["points"]:
            val = fn(pt, ctx)
            agg.gap(name, pt, val, strict,
                    lambda c2, fn=fn, pt=pt: fn(pt, c2))


def _run_grid_monotone(agg, case, section, grid, ctx):
    """Jet derivative sign at each point AND discrete differences; both must agree."""
    pts = _grid_points(agg, grid, case, ctx)
    increasing = section["increasing"]
    jet_fn = section["jet"]
    sign = 1 if increasing else -1
    jet_violation = False
    for x in pts:
        try:
            d1 = J.derivative(jet_fn(x, 1, ctx), 1)
        except DomainError as err:
            agg.exclude(x, str(err))
            continue
        before = len(agg.violations)
        agg.gap("derivative sign", x, sign * d1, True,
                lambda c2, x=x: sign * J.derivative(jet_fn(x, 1, c2), 1))
        jet_violation = jet_violation or len(agg.violations) > before
    value_fn = section["value"]
    diff_violation = False
    values = []
    for x in pts:
        try:
            values.append((x, value_fn(x, ctx)))
        except DomainError:
            continue
    for (x0, v0), (x1, v1) in zip(values, values[1:]):
        # adjacent differences never straddle an excluded singular gap
        if any(x0 < mpctx(ctx.bits).convert(s) < x1 for s in case.singular_points):
            continue
        before = len(agg.violations)
        agg.gap("adjacent difference", x1, sign * (v1 - v0), True,
                lambda c2, x0=x0, x1=x1: sign * (value_fn(x1, c2) - value_fn(x0, c2)))
        diff_violation = diff_violation or len(agg.violations) > before
    if jet_violation != diff_violation:
        agg.inconclusive.append(("monotone cross-check disagreement", None))
        agg.note("jet-derivative and discrete-difference verdicts disagree")


def _run_grid_curvature(agg, case, section, grid, ctx):
    """Second-derivative sign at each point AND divided second differences."""
    pts = _grid_points(agg, grid, case, ctx)
    sign = section["sign"]
    jet_fn = section["jet"]
    for x in pts:
        try:
            d2 = J.derivative(jet_fn(x, 2, ctx), 2)
        except DomainError as err:
            agg.exclude(x, str(err))
            continue
        agg.gap("second derivative sign", x, sign * d2, True,
                lambda c2, x=x: sign * J.derivative(jet_fn(x, 2, c2), 2))
    value_fn = section["value"]
    values = []
    for x in pts:
        try:
            values.append((x, value_fn(x, ctx)))
        except DomainError:
            continue

    def divided2(c2, triple):
        (x0, x1, x2) = triple
        f0, f1, f2 = (value_fn(x0, c2), value_fn(x1, c2), value_fn(x2, c2))
        return ((f2 - f1) / (x2 - x1) - (f1 - f0) / (x1 - x0)) / (x2 - x0)

    for (x0, v0), (x1, v1), (x2, v2) in zip(values, values[1:], values[2:]):
        if any(x0 < mpctx(ctx.bits).convert(s) < x2 for s in case.singular_points):
            continue
        dd = ((v2 - v1) / (x2 - x1) - (v1 - v0) / (x1 - x0)) / (x2 - x0)
        agg.gap("divided second difference", x1, sign * dd, True,
                lambda c2, t=(x0, x1, x2): sign * divided2(c2, t))


def _run_seq_monotone(agg, case, section, ns, ctx, params):
    cache = bf.sequence_cache(ctx)
    if ns:
        cache.ensure(min(max(ns) + 6, bf.MAX_DIMENSION))
    value_fn = section["value"]
    sign = 1 if section["increasing"] else -1
    pairs = [(n0, n1) for n0, n1 in zip(ns, ns[1:]) if n1 == n0 + 1]
    for n0, n1 in pairs:
        val = sign * (value_fn(n1, cache) - value_fn(n0, cache))
        agg.gap("first difference", n1, val, True,
                lambda c2, n0=n0, n1=n1: sign * (
                    value_fn(n1, bf.sequence_cache(c2))
                    - value_fn(n0, bf.sequence_cache(c2))))
    if section.get("report_tail_ratio") and pairs:
        n0, n1 = pairs[-1]
        m = cache._m
        agg.extras["tail_log_ratio"] = value_fn(n1, cache) - value_fn(n0, cache)
        agg.extras["tail_ratio"] = m.exp(agg.extras["tail_log_ratio"])


def _run_seq_convex(agg, case, section, ns, ctx, params):
    cache = bf.sequence_cache(ctx)
    if ns:
        cache.ensure(min(max(ns) + 6, bf.MAX_DIMENSION))
    value_fn = section["value"]
    for n0, n1, n2 in ((n, n + 1, n + 2) for n in ns[:-2]):
        val = value_fn(n0, cache) + value_fn(n2, cache) - 2 * value_fn(n1, cache)
        agg.gap("second difference", n1, val, True,
                lambda c2, n0=n0, n1=n1, n2=n2: (
                    value_fn(n0, bf.sequence_cache(c2))
                    + value_fn(n2, bf.sequence_cache(c2))
                    - 2 * value_fn(n1, bf.sequence_cache(c2))))


def _run_scan(agg, case, section, grid, ctx, params=None):
    pts = _grid_points(agg, grid, case, ctx)
    jet_fn = section["jet"]
    max_order = section["max_order"]
    if params and params.get("max_order"):
        max_order = params["max_order"]
    pattern = section["pattern"]
    strict = section.get("strict", True)
    label = section.get("label", "")
    orders = {}
    for k in range(1, max_order + 1):
        orders[k] = {"min_margin": None, "witness": None, "ok": True}
    for x in pts:
        try:
            jet = jet_fn(x, max_order, ctx)
        except DomainError as err:
            agg.exclude(x, str(err))
            continue
        for k in range(1, max_order + 1):
            val = pattern(k) * J.derivative(jet, k)
            before = len(agg.violations)
            side = f"{label} order {k}" if label else f"order {k}"
            agg.gap(side, x, val, strict,
                    lambda c2, x=x, k=k: pattern(k) * J.derivative(
                        jet_fn(x, max_order, c2), k))
            rec = orders[k]
            if len(agg.violations) > before:
                rec["ok"] = False
                rec["witness"] = x
            else:
                margin = abs(val)
                if rec["min_margin"] is None or margin < rec["min_margin"]:
                    rec["min_margin"] = margin
                    rec["witness"] = x
    key = f"orders[{label}]" if label else "orders"
    agg.extras[key] = orders


def _richardson(ys, ts, m):
    """One Richardson level in the variable t (two applications are used)."""
    out = []
    for i in range(1, len(ys)):
        t0, t1 = ts[i - 1], ts[i]
        out.append(ys[i] + (ys[i] - ys[i - 1]) * t1 / (t0 - t1))
    return out


def _run_limit(agg, case, section, ctx):
    m = mpctx(ctx.bits + 16)
    schedule = section["schedule"]
    value_fn = section["value"]
    tol = m.convert(section["tol"])
    target = m.convert(_parse_target(section["target"], m))
    ys = [m.convert(value_fn(n, ctx)) for n in schedule]
    ts = [1 / m.ln(n) for n in schedule]
    z1 = _richardson(ys, ts, m)
    z2 = _richardson(z1, ts[1:], m)
    extrapolant = z2[-1]
    err = abs(extrapolant - target)
    rows = []
    for i, n in enumerate(schedule):
        rows.append({
            "point": n,
            "raw": ys[i],
            "level1": z1[i - 1] if i >= 1 else None,
            "level2": z2[i - 2] if i >= 2 else None,
        })
    agg.extras.setdefault("limits", []).append({
        "target": target, "extrapolant": extrapolant, "error": err,
        "tolerance": tol, "rows": rows,
    })
    if err < tol:
        agg._margin(tol - err, schedule[-1])
    else:
        agg.violations.append(("limit extrapolation", schedule[-1], err))
    if "monotone_margin_to" in section:
        bound = m.convert(section["monotone_margin_to"])
        margins = [bound - y for y in ys]
        shrinks = all(b < a for a, b in zip(margins, margins[1:]))
        positive = all(g >= 0 for g in margins)
        agg.extras["margins_to_bound"] = margins
        if not positive:
            agg.violations.append(("margin to bound", schedule[-1], margins[-1]))
        if not shrinks:
            agg.note("margins toward the bound are not monotonically shrinking")
            agg.inconclusive.append(("margin shrink monotonicity", schedule[-1]))


def _parse_target(target, m):
    if isinstance(target, str):
        if target == "exp(-1/2)":
            return m.exp(-m.mpf(1) / 2)
        return m.mpf(target)
    return m.convert(target)


def _run_divergence(agg, case, section, ctx):
    m = mpctx(ctx.bits + 16)
    schedule = section["schedule"]
    value_fn = section["value"]
    below = m.convert(section["below"])
    ys = [m.convert(value_fn(x, ctx)) for x in schedule]
    decreasing = all(b < a for a, b in zip(ys, ys[1:]))
    agg.extras["divergence_tail"] = ys
    if not decreasing:
        agg.violations.append(("divergence monotone decrease", schedule[-1], ys[-1]))
    if not ys[-1] < below:
        agg.violations.append(("divergence threshold", schedule[-1], ys[-1]))
    else:
        agg._margin(below - ys[-1], schedule[-1])
    agg.extras["divergence_verdict"] = "-inf" if decreasing and ys[-1] < below else "?"


def _run_search_instance(agg, case, ctx, n_max):
    res = verify_feasible_instance(ctx, n_max=n_max or 100)
    agg.extras["feasible_instance"] = res
    if not res["algebraic_identity"] or not res["matches_band_case"]:
        agg.violations.append(("feasible instance", None, 0))
    else:
        agg._margin(res["min_margin"], res["witness"])


# ---------------------------------------------------------------------------

def check_case(case_id: str, ctx: PrecisionContext,
               grid: Optional[GridSpec] = None,
               n_max: Optional[int] = None,
               n_default: int = DEFAULT_N_MAX,
               params: Optional[dict] = None) -> CheckReport:
    """Check one registered claim and return its report.

    ``grid`` overrides every grid section; ``n_max`` overrides the integer
    domain end (and may extend a fixed validity window, e.g. to exhibit the
    counterexample past it); ``params`` feeds claim-specific knobs such as
    the sharpness perturbation of the lower constant.
    """
    reg = registry()
    if case_id not in reg:
        raise KeyError(f"unknown claim id: {case_id}")
    case = reg[case_id]
    agg = _Aggregate(case, ctx)

    ns: list[int] = []
    if isinstance(case.domain, IntRange):
        ns = case.domain.resolve(n_max, n_default)

    grid_dict = _domain_dict(case, grid, n_max, n_default)

    for section in case.payload.get("sections", []):
        kind = section["type"]
        sec_default = section.get("grid") or (
            case.domain if isinstance(case.domain, GridSpec) else None)
        if grid is not None:
            sec_grid = _clip_grid(grid, sec_default)
            if sec_grid is None and sec_default is not None:
                agg.note(f"section '{kind}' skipped: override grid does not"
                         " intersect its validity window")
                continue
        else:
            sec_grid = sec_default
        if kind == "grid_sides":
            _run_grid_sides(agg, case, section, sec_grid, ctx)
        elif kind == "seq_sides":
            sec_ns = (section["domain"].resolve(n_max, n_default)
                      if section.get("domain") else ns)
            _run_seq_sides(agg, case, section, sec_ns, ctx, params)
        elif kind == "box":
            _run_box(agg, case, section, ctx)
        elif kind == "grid_monotone":
            _run_grid_monotone(agg, case, section, sec_grid, ctx)
        elif kind == "grid_curvature":
            _run_grid_curvature(agg, case, section, sec_grid, ctx)
        elif kind == "seq_monotone":
            _run_seq_monotone(agg, case, section, ns, ctx, params)
        elif kind == "seq_convex":
            _run_seq_convex(agg, case, section, ns, ctx, params)
        elif kind == "scan":
            _run_scan(agg, case, section, sec_grid, ctx, params)
        elif kind == "limit":
            _run_limit(agg, case, section, ctx)
        elif kind == "divergence":
            _run_divergence(agg, case, section, ctx)
        elif kind == "delegate":
            pts = _grid_points(agg, sec_grid, case, ctx) if sec_grid else None
            sub = section["run"](ctx, pts)
            return _merge_delegate(case, sub, grid_dict)
        elif kind == "search_instance":
            _run_search_instance(agg, case, ctx, n_max)
        else:
            raise DomainError("check_case", kind, "unknown section type")
    return agg.report(grid_dict)


def _domain_dict(case, grid, n_max, n_default) -> dict:
    if grid is not None:
        return grid.to_dict()
    if isinstance(case.domain, GridSpec):
        return case.domain.to_dict()
    end = case.domain.resolved_end(n_max, n_default)
    return case.domain.to_dict(end)


def _merge_delegate(case: ClaimCase, sub: CheckReport, grid_dict: dict) -> CheckReport:
    sub.id = case.id
    sub.anchor = case.anchor
    sub.grid = grid_dict
    return sub


def scan_derivative_signs(fn_id: str, max_order: int, grid: GridSpec,
                          ctx: PrecisionContext, a=None) -> list[CheckReport]:
    """Per-order derivative-sign reports for one function on one grid.

    fn_id is one of AQ, F_a, G, one_minus_G, ln_Q; F_a takes the base via
    ``a``. Conjecture vocabulary: consistent-with / refuted-at-witness.
    """
    if max_order > 8:
        raise DomainError("scan_derivative_signs", max_order,
                          "orders above 8 need an explicit opt-in (escalation cost)")
    jets = {
        "AQ": (bf.jet_AQ, lambda k: 1 if k % 2 == 1 else -1),
        "G": (bf.jet_G, lambda k: 1 if k % 2 == 1 else -1),
        "one_minus_G": (bf.jet_G, lambda k: 1 if k % 2 == 1 else -1),
        "ln_Q": (bf.jet_ln_Q, lambda k: -1 if k % 2 == 1 else 1),
    }
    if fn_id == "F_a":
        if a is None:
            raise DomainError("scan_derivative_signs", fn_id, "F_a needs the base a")
        jet_fn = lambda x, K, c: bf.jet_F_a(a, x, K, c)
        pattern = lambda k: 1 if k % 2 == 1 else -1
    elif fn_id in jets:
        jet_fn, pattern = jets[fn_id]
    else:
        raise DomainError("scan_derivative_signs", fn_id,
                          "expected AQ, F_a, G, one_minus_G or ln_Q")
    reports = []
    for k in range(1, max_order + 1):
        case = ClaimCase(
            id=f"SCAN_{fn_id}_ORDER_{k}", kind=Kind.DERIVATIVE_SIGNS, domain=grid,
            strictness="strict", expressions=(fn_id,),
            anchor=f"conjectured sign of derivative order {k} of {fn_id}",
            conjecture=True)
        agg = _Aggregate(case, ctx)
        for x in _grid_points(agg, grid, case, ctx):
            val = pattern(k) * J.derivative(jet_fn(x, k, ctx), k)
            agg.gap(f"order {k}", x, val, True,
                    lambda c2, x=x: pattern(k) * J.derivative(jet_fn(x, k, c2), k))
        reports.append(agg.report(grid.to_dict()))
    return reports


# ---------------------------------------------------------------------------
# Limit extrapolation as a standalone operation

_LIMIT_SEQS = {
    "EQ4": ("EQ4_LIMIT", "exp(-1/2)"),
    "EQ3": ("EQ3_LIMIT", "0.5"),
    "EQ13_upper": ("EQ13_LIMITS", "1"),
}


def extrapolate_limit(seq_id: str, ctx: PrecisionContext):
    """(extrapolant, convergence rows) for one of the limit schedules."""
    if seq_id not in _LIMIT_SEQS:
        raise DomainError("extrapolate_limit", seq_id,
                          f"expected one of {sorted(_LIMIT_SEQS)}")
    case_id, _ = _LIMIT_SEQS[seq_id]
    report = check_case(case_id, ctx)
    entry = report.extras["limits"][-1]
    return entry["extrapolant"], entry["rows"]


# ---------------------------------------------------------------------------
# Open-problem constant search

def _ln_ratio_table(ctx: PrecisionContext, n_max: int) -> list:
    cache = bf.sequence_cache(ctx)
    cache.ensure(n_max + 2)
    return [None] + [cache.ratio_r(n) for n in range(1, n_max + 1)]


def _lhs_ok(m, ln_r, n, a, lam, alpha) -> bool:
    """(1 - lam/(n+a))^(1/alpha) < R_n, in logs."""
    inner = 1 - lam / (n + a)
    if inner <= 0:
        return True  # degenerate lower bound, trivially below the positive ratio
    return m.ln(inner) / alpha < ln_r[n]


def _rhs_ok(m, ln_r, n, b, mu, beta) -> bool:
    """R_n < (1 - mu/(n+b))^(1/beta), in logs."""
    inner = 1 - mu / (n + b)
    if inner <= 0:
        return False
    return ln_r[n] < m.ln(inner) / beta


def _bisect(lo, hi, pred, m, iters: int = 60):
    """Largest value in [lo, hi] keeping the predicate true.

    Assumes pred(lo) holds and pred is monotone (true below a frontier)."""
    lo = m.convert(lo)
    hi = m.convert(hi)
    for _ in range(iters):
        mid = (lo + hi) / 2
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo


def verify_feasible_instance(ctx: PrecisionContext, n_max: int = 100) -> dict:
    """Check that the (alpha=2, lam=1, a=3 | beta=4, mu=1, b=3) instance
    reproduces the one-step band exactly, algebraically and numerically."""
    m = mpctx(ctx.bits + 16)
    algebraic = all(
        Fraction(1) - Fraction(1, n + 3) == Fraction(n + 2, n + 3)
        for n in range(1, 50))
    ln_r = _ln_ratio_table(ctx, n_max)
    inst = OpenProblemParams(a=3, b=3, lam=1, mu=1, alpha=2, beta=4)
    min_margin = None
    witness = None
    matches = True
    for n in range(1, n_max + 1):
        lo_inst = m.ln(1 - m.mpf(inst.lam) / (n + inst.a)) / m.mpf(inst.alpha)
        hi_inst = m.ln(1 - m.mpf(inst.mu) / (n + inst.b)) / m.mpf(inst.beta)
        lo_band = (m.ln(n + 2) - m.ln(n + 3)) / 2
        hi_band = (m.ln(n + 2) - m.ln(n + 3)) / 4
        if abs(lo_inst - lo_band) > m.ldexp(1, -(ctx.bits - 16)) or \
           abs(hi_inst - hi_band) > m.ldexp(1, -(ctx.bits - 16)):
            matches = False
        margin = min(ln_r[n] - lo_inst, hi_inst - ln_r[n])
        if min_margin is None or margin < min_margin:
            min_margin = margin
            witness = n
    return {
        "algebraic_identity": algebraic,
        "matches_band_case": matches,
        "min_margin": min_margin,
        "witness": witness,
        "instance": inst,
    }


def search_open27(n_max: int, ctx: PrecisionContext,
                  frontier_points: int = 24) -> dict:
    """Empirical extremes of the six constants, one at a time.

    Holds the remaining parameters at the feasible instance and bisects each
    constrained parameter to the furthest value keeping the band true for all
    n <= n_max. The results are empirical bounds for this n range, explicitly
    not proofs. Also returns a per-n frontier table of the closed-form
    per-dimension extreme for each parameter.
    """
    if n_max < 10:
        raise DomainError("search_open27", n_max, "requires n_max >= 10")
    m = mpctx(ctx.bits + 16)
    ln_r = _ln_ratio_table(ctx, n_max)
    one = m.mpf(1)

    def lhs_all(a=m.mpf(3), lam=one, alpha=m.mpf(2)):
        return all(_lhs_ok(m, ln_r, n, a, lam, alpha) for n in range(1, n_max + 1))

    def rhs_all(b=m.mpf(3), mu=one, beta=m.mpf(4)):
        return all(_rhs_ok(m, ln_r, n, b, mu, beta) for n in range(1, n_max + 1))

    empirical = {}
    empirical["a"] = _bisect(3, 64, lambda v: lhs_all(a=v), m)
    empirical["alpha"] = _bisect(2, 64, lambda v: lhs_all(alpha=v), m)
    empirical["mu"] = _bisect(1, 4, lambda v: rhs_all(mu=v), m)
    # decreasing-direction searches bisect on the negated axis
    empirical["lam"] = -_bisect(-1, -m.ldexp(1, -20),
                                lambda v: lhs_all(lam=-m.convert(v)), m)
    empirical["b"] = -_bisect(-3, -m.mpf("0.05"),
                              lambda v: rhs_all(b=-m.convert(v)), m)
    empirical["beta"] = -_bisect(-4, -m.mpf("1.5"),
                                 lambda v: rhs_all(beta=-m.convert(v)), m)

    # closed-form per-n extremes, and the dimension at which each binds
    frontier = []
    schedule = sorted(set(
        list(range(1, 11))
        + [min(n_max, round(n_max ** (k / (frontier_points - 10))))
           for k in range(1, frontier_points - 9)]))
    schedule = [n for n in schedule if 1 <= n <= n_max]
    binding = {k: (None, None) for k in ("a", "lam", "alpha", "mu", "b", "beta")}
    for n in range(1, n_max + 1):
        r2 = m.exp(2 * ln_r[n])
        r4 = m.exp(4 * ln_r[n])
        log_band = m.ln(m.mpf(n + 2) / (n + 3))
        row = {
            "a": 1 / (1 - r2) - n,
            "lam": (n + 3) * (1 - r2),
            "alpha": log_band / ln_r[n],
            "mu": (n + 3) * (1 - r4),
            "b": 1 / (1 - r4) - n,
            "beta": log_band / ln_r[n],
        }
        for key, better_is_min in (("a", True), ("alpha", True), ("mu", True),
                                   ("lam", False), ("b", False), ("beta", False)):
            cur = binding[key]
            val = row[key]
            if cur[0] is None or (better_is_min and val < cur[0]) \
                    or (not better_is_min and val > cur[0]):
                binding[key] = (val, n)
        if n in schedule:
            frontier.append({"n": n, **row})

    feasible = verify_feasible_instance(ctx, n_max=min(n_max, 200))
    return {
        "n_max": n_max,
        "feasible_instance": feasible,
        "empirical": empirical,
        "binding": binding,
        "frontier": frontier,
        "disclaimer": ("empirical extremes for n <= n_max at the feasible"
                       " instance of the other parameters; not proofs"),
    }
