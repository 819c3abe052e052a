"""The claim registry: every registered verifiable statement, declaratively.

Each case's payload is a list of sections consumed by the generic checker:
inequality sides (gap functions that must certify Positive), monotonicity and
curvature witnesses (jets plus discrete differences), log-convexity second
differences, limit schedules, derivative-sign scans, sampled parameter boxes,
and delegations to the proof-cascade verifiers. Sequence gap functions
receive (n, cache, params); grid gap functions receive (x, ctx).
"""

from __future__ import annotations

import math
from typing import Optional

from . import ballfun as bf
from . import cascade
from . import gammaspec as gs
from .claims import ClaimCase, GridSpec, IntRange, Kind
from .realcore import PrecisionContext, mpctx

DEFAULT_N_MAX = 100_000
DEFAULT_FUNCTION_GRID = GridSpec(0.01, 200, 2048, "log")

_E = math.e


# ---------------------------------------------------------------------------
# Shared constants and gap helpers

def sharp_a(m):
    """Lower sharp constant: ln2 ln pi - 2 (ln2)^2 ln(4 pi/3) / (3 ln3)."""
    return m.ln(2) * m.ln(m.pi) - 2 * m.ln(2) ** 2 * m.ln(4 * m.pi / 3) / (3 * m.ln(3))


def sharp_b(m):
    """Upper sharp constant: (1 + ln(2 pi)) / 2."""
    return (1 + m.ln(2 * m.pi)) / 2


def _norm(n, cache):
    """Normalization weight n (ln n)^2."""
    return n * cache.ln_n(n) ** 2


def _eq9_lower(n, cache, params):
    m = cache._m
    a = sharp_a(m)
    if params and "a_shift" in params:
        a = a + m.convert(params["a_shift"])
    return (cache.seq_s(n) - cache.seq_s(n + 1)) - a / _norm(n, cache)


def _eq9_upper(n, cache, params):
    m = cache._m
    return sharp_b(m) / _norm(n, cache) - (cache.seq_s(n) - cache.seq_s(n + 1))


def _eq18_lower(n, cache, params):
    return cache.ln_omega(n) - cache._m.mpf(n) / (n + 1) * cache.ln_omega(n + 1)


def _eq18_upper(n, cache, params):
    m = cache._m
    bound = n * (m.ln(2) - m.ln(m.pi) / 2) + m.mpf(n) / (n + 1) * cache.ln_omega(n + 1)
    return bound - cache.ln_omega(n)


def _eq18_vs_19(n, cache, params):
    m = cache._m
    return m.mpf(1) / 2 - n * (m.ln(2) - m.ln(m.pi) / 2)


def _eq19_lower(n, cache, params):
    m = cache._m
    bound = (m.ln(2) - m.ln(m.pi) / 2) + m.mpf(n) / (n + 1) * cache.ln_omega(n + 1)
    return cache.ln_omega(n) - bound


def _eq19_upper(n, cache, params):
    m = cache._m
    bound = m.mpf(1) / 2 + m.mpf(n) / (n + 1) * cache.ln_omega(n + 1)
    return bound - cache.ln_omega(n)


def _eq21_gap(n, cache, params):
    return (cache.ln_n(n) - cache.ln_n(n + 2)) / 4 - (cache.ln_q(n + 2) - cache.ln_q(n))


def _eq22_gap(n, cache, params):
    m = cache._m
    lhs = cache.ln_omega(n + 5) / (n + 3) - cache.ln_omega(n + 3) / (n + 1)
    rhs = (-2 * m.ln(m.pi) / ((n + 1) * (n + 3))
           + (cache.ln_n(n + 3) - cache.ln_n(n + 5)) / 4)
    return rhs - lhs


def _eq24_lower(n, cache, params):
    half_log = (cache.ln_n(n + 2) - cache.ln_n(n + 4)) / 2
    return (cache.ln_q(n + 2) - cache.ln_q(n)) - half_log


def _eq24_upper(n, cache, params):
    quarter_log = (cache.ln_n(n + 2) - cache.ln_n(n + 4)) / 4
    return quarter_log - (cache.ln_q(n + 2) - cache.ln_q(n))


def _eq24_vs_21(n, cache, params):
    c = cache
    return ((c.ln_n(n + 2) - c.ln_n(n + 4)) - (c.ln_n(n) - c.ln_n(n + 2))) / 4


def _eq25_mid(n, cache, params):
    return cache.ln_omega(n + 2) / n - cache.ln_omega(n) / (n - 2)


def _eq25_weight(n, cache):
    m = cache._m
    return -2 * m.ln(m.pi) / ((n - 2) * m.mpf(n))


def _eq25_lower(n, cache, params):
    half_log = (cache.ln_n(n + 2) - cache.ln_n(n + 4)) / 2
    return _eq25_mid(n, cache, params) - (_eq25_weight(n, cache) + half_log)


def _eq25_upper(n, cache, params):
    eighth_log = (cache.ln_n(n + 2) - cache.ln_n(n + 4)) / 8
    return (_eq25_weight(n, cache) + eighth_log) - _eq25_mid(n, cache, params)


def _eq26_lower(n, cache, params):
    half_log = (cache.ln_n(n + 2) - cache.ln_n(n + 3)) / 2
    return cache.ratio_r(n) - half_log


def _eq26_upper(n, cache, params):
    quarter_log = (cache.ln_n(n + 2) - cache.ln_n(n + 3)) / 4
    return quarter_log - cache.ratio_r(n)


def _eq26_real_lower(x, ctx):
    m = ctx.working()
    xv = m.convert(x)
    r = bf.ln_Q(xv + 1, ctx) - bf.ln_Q(xv, ctx)
    return r - (m.ln(xv + 2) - m.ln(xv + 3)) / 2


def _eq26_real_upper(x, ctx):
    m = ctx.working()
    xv = m.convert(x)
    r = bf.ln_Q(xv + 1, ctx) - bf.ln_Q(xv, ctx)
    return (m.ln(xv + 2) - m.ln(xv + 3)) / 4 - r


def _aq_above_low(x, ctx):
    m = ctx.working()
    return bf.AQ(x, ctx) - (1 - m.euler)


def _aq_below_one(x, ctx):
    return 1 - bf.AQ(x, ctx)


def _g_above_two_thirds(x, ctx):
    m = ctx.working()
    return bf.G(x, ctx) - m.mpf(2) / 3


def _g_below_one(x, ctx):
    return 1 - bf.G(x, ctx)


def _series_term(n, cache):
    """ln of the probe series term: ln_omega(n) / ln n."""
    return cache.ln_omega(n) / cache.ln_n(n)


# Generic gamma-ratio midline of the sampled-box inequalities, in log space.
def _gamma_ratio_mid(x, y, t, ctx):
    m = ctx.working()
    num = gs.lgamma(x + y + 1, ctx) - gs.lgamma(y + 1, ctx)
    den = gs.lgamma(x + y + t + 1, ctx) - gs.lgamma(y + 1, ctx)
    return num / x - den / (x + t)


def _eq20_direct(pt, ctx):
    x, y = pt
    m = ctx.working()
    xv, yv = m.convert(x), m.convert(y)
    bound = (m.ln(xv + yv) - m.ln(xv + yv + 1)) / 2
    return bound - _gamma_ratio_mid(xv, yv, m.mpf(1), ctx)


def _eq20_reversed(pt, ctx):
    return -_eq20_direct(pt, ctx)


def _eq23_bounds(pt, ctx):
    x, y, t = pt
    m = ctx.working()
    xv, yv, tv = m.convert(x), m.convert(y), m.convert(t)
    a = max(m.mpf(1), 1 / (yv + 1))
    b = min(m.mpf(1), 1 / (2 * (yv + 1)))
    r = m.ln(xv + yv + 1) - m.ln(xv + yv + tv + 1)
    mid = _gamma_ratio_mid(xv, yv, tv, ctx)
    return a * r, mid, b * r


def _eq23_lower(pt, ctx):
    lo, mid, hi = _eq23_bounds(pt, ctx)
    return mid - lo


def _eq23_upper(pt, ctx):
    lo, mid, hi = _eq23_bounds(pt, ctx)
    return hi - mid


def _lem1_sides():
    sides = []

    def psi_low(x, ctx):
        lo, _ = gs.psi_envelope(x, ctx)
        return gs.digamma(x, ctx) - lo

    def psi_high(x, ctx):
        _, hi = gs.psi_envelope(x, ctx)
        return hi - gs.digamma(x, ctx)

    sides.append(("psi > ln x - 1/x", psi_low, True))
    sides.append(("psi < ln x - 1/(2x)", psi_high, True))
    for k in range(1, 6):
        def poly_low(x, ctx, k=k):
            lo, _ = gs.polygamma_envelope(k, x, ctx)
            val = gs.polygamma(k, x, ctx)
            return (val if k % 2 == 1 else -val) - lo

        def poly_high(x, ctx, k=k):
            _, hi = gs.polygamma_envelope(k, x, ctx)
            val = gs.polygamma(k, x, ctx)
            return hi - (val if k % 2 == 1 else -val)

        sides.append((f"|psi^({k})| above its lower envelope", poly_low, True))
        sides.append((f"|psi^({k})| below its upper envelope", poly_high, True))
    return sides


def _lem3_low(t, ctx):
    lo, _ = gs.log_bound_gaps(t, ctx)
    return lo


def _lem3_high(t, ctx):
    _, hi = gs.log_bound_gaps(t, ctx)
    return hi


# ---------------------------------------------------------------------------
# Box sample points for the generic gamma-ratio inequalities; corners include
# the specializations used downstream (y=0, y=1, t=1, t=1/2).

_EQ20_DIRECT_BOX = tuple((x, y)
                         for x in (1.5, 2.0, 2.5, 5.0, 10.0)
                         for y in (-0.5, 0.0, 0.5, 1.0, 3.0))
_EQ20_REVERSED_BOX = tuple((x, y)
                           for x in (0.2, 0.4, 0.6, 0.8, 0.95)
                           for y in (-0.1, 0.0, 0.5, 1.0, 3.0)
                           if x + y > 0)
_EQ23_BOX = tuple((x, y, t)
                  for x in (0.5, 1.0, 2.0, 5.0, 10.0)
                  for y in (-0.5, 0.0, 1.0, 2.0, 5.0)
                  for t in (0.5, 1.0, 2.0, 5.0, 10.0))


def _alt_sign(order: int) -> int:
    """(-1)^(order-1): positive odd derivatives, negative even ones."""
    return 1 if order % 2 == 1 else -1


def _cm_log_sign(order: int) -> int:
    """(-1)^order: expected sign pattern of a log-completely-monotone log."""
    return -1 if order % 2 == 1 else 1


def _table_exp_ratio(n, cache):
    m = cache._m
    return m.exp(cache.ratio_r(n))


def _build_registry() -> dict[str, ClaimCase]:
    cases: list[ClaimCase] = []
    add = cases.append

    # -- introductory function and limits ----------------------------------
    add(ClaimCase(
        id="EQ2_INC", kind=Kind.MONOTONE,
        domain=GridSpec(2, 200, 2048, "log"), strictness="strict",
        expressions=("lgamma",),
        anchor="x -> ln Gamma(1 + x/2) / x is strictly increasing on [2, oo)",
        payload={"sections": [
            {"type": "grid_monotone", "jet": bf.jet_intro_ratio,
             "value": lambda x, ctx: gs.lgamma(1 + ctx.working().convert(x) / 2,
                                               ctx) / ctx.working().convert(x),
             "increasing": True},
        ]}))

    add(ClaimCase(
        id="EQ3_LIMIT", kind=Kind.LIMIT,
        domain=IntRange(16, 2 ** 20), strictness="non_strict",
        expressions=("lgamma",),
        anchor="ln Gamma(1 + x/2) / (x ln x) tends to 1/2 as x -> oo",
        payload={"sections": [
            {"type": "limit",
             "schedule": [2 ** k for k in range(4, 21)],
             "value": lambda n, ctx: gs.lgamma(
                 1 + ctx.working().mpf(n) / 2, ctx) / (n * ctx.working().ln(n)),
             "target": "0.5", "tol": 1e-2},
        ]}))

    add(ClaimCase(
        id="EQ4_LIMIT", kind=Kind.LIMIT,
        domain=IntRange(16, 2 ** 20), strictness="non_strict",
        expressions=("seq_s",),
        anchor="v(n)^(1/(n ln n)) tends to exp(-1/2) as n -> oo",
        payload={"sections": [
            {"type": "limit",
             "schedule": [2 ** k for k in range(4, 21)],
             "value": lambda n, ctx: ctx.working().exp(bf.seq_s(n, ctx)),
             "target": "exp(-1/2)", "tol": 1e-2},
        ]}))

    add(ClaimCase(
        id="SERIES_PROBE", kind=Kind.MONOTONE,
        domain=IntRange(2), strictness="strict",
        expressions=("ln_omega",),
        anchor="terms v(n)^(1/ln n) decrease strictly; successive ratio stays below 1",
        payload={"sections": [
            {"type": "seq_monotone", "value": _series_term, "increasing": False,
             "report_tail_ratio": True},
        ]}))

    add(ClaimCase(
        id="OMEGA_1N_DEC_LOGCONVEX", kind=Kind.LOG_CONVEX_SEQ,
        domain=IntRange(1), strictness="strict",
        expressions=("ln_Q",),
        anchor="v(n)^(1/n) is strictly decreasing and strictly log-convex",
        payload={"sections": [
            {"type": "seq_monotone", "value": lambda n, c: c.ln_q(n),
             "increasing": False},
            {"type": "seq_convex", "value": lambda n, c: c.ln_q(n)},
        ]}))

    # -- derivative signs and range of the log-gamma ratio ------------------
    add(ClaimCase(
        id="EQ6_AQ_SIGNS", kind=Kind.DERIVATIVE_SIGNS,
        domain=DEFAULT_FUNCTION_GRID, strictness="strict",
        expressions=("AQ",), conjecture=True, singular_points=(1,),
        anchor="(-1)^(n-1) AQ^(n)(x) > 0 for x > 0 and every derivative order n",
        payload={"sections": [
            {"type": "scan", "label": "AQ", "jet": bf.jet_AQ,
             "pattern": _alt_sign, "max_order": 8},
        ]}))

    add(ClaimCase(
        id="EQ7_AQ_RANGE", kind=Kind.MONOTONE,
        domain=DEFAULT_FUNCTION_GRID, strictness="strict",
        expressions=("AQ",), singular_points=(1,),
        anchor="AQ is strictly increasing on (0, oo) with values in (1-gamma, 1) on (1, oo)",
        payload={"sections": [
            {"type": "grid_monotone", "jet": bf.jet_AQ, "value": bf.AQ,
             "increasing": True},
            {"type": "grid_sides", "grid": GridSpec(1, 200, 1024, "log"),
             "sides": [("AQ > 1 - gamma", _aq_above_low, True),
                       ("AQ < 1", _aq_below_one, True)]},
        ]}))

    # -- the half-log ratio: monotone on both sides, concave beyond 1/2 -----
    add(ClaimCase(
        id="THM1_F_INC_LOW", kind=Kind.MONOTONE,
        domain=GridSpec(0.01, 0.5, 1024, "log"), strictness="strict",
        expressions=("F",), singular_points=(0.5,),
        anchor="F is strictly increasing on (0, 1/2)",
        payload={"sections": [
            {"type": "grid_monotone", "jet": bf.jet_F, "value": bf.F,
             "increasing": True},
        ]}))

    add(ClaimCase(
        id="THM1_F_INC_HIGH", kind=Kind.MONOTONE,
        domain=GridSpec(0.5, 200, 1024, "log"), strictness="strict",
        expressions=("F",), singular_points=(0.5,),
        anchor="F is strictly increasing on (1/2, oo)",
        payload={"sections": [
            {"type": "grid_monotone", "jet": bf.jet_F, "value": bf.F,
             "increasing": True},
        ]}))

    add(ClaimCase(
        id="THM1_F_CONCAVE", kind=Kind.CONCAVE,
        domain=GridSpec(0.5, 200, 2048, "log"), strictness="strict",
        expressions=("F",), singular_points=(0.5,),
        anchor="F is strictly concave on (1/2, oo)",
        payload={"sections": [
            {"type": "grid_curvature", "jet": bf.jet_F, "value": bf.F,
             "sign": -1},
        ]}))

    # -- log-convexity of the root sequence ---------------------------------
    add(ClaimCase(
        id="THM2_LOGCONVEX", kind=Kind.LOG_CONVEX_SEQ,
        domain=IntRange(2), strictness="strict",
        expressions=("seq_s",),
        anchor="v(n)^(1/(n ln n)) is strictly log-convex for n >= 2",
        payload={"sections": [
            {"type": "seq_convex", "value": lambda n, c: c.seq_s(n)},
        ]}))

    add(ClaimCase(
        id="THM2_RATIO_DEC", kind=Kind.MONOTONE,
        domain=IntRange(2), strictness="strict",
        expressions=("seq_s",),
        anchor="v(n)^(1/(n ln n)) / v(n+1)^(1/((n+1) ln(n+1))) decreases strictly for n >= 2",
        payload={"sections": [
            {"type": "seq_monotone",
             "value": lambda n, c: c.seq_s(n) - c.seq_s(n + 1),
             "increasing": False},
        ]}))

    add(ClaimCase(
        id="THM2_PROOF_LOGCONVEX_FN", kind=Kind.DERIVATIVE_SIGNS,
        domain=GridSpec(1, 200, 1024, "log"), strictness="strict",
        expressions=("ln_f_thm2",), singular_points=(1,),
        anchor="the second derivative of ln_f_thm2 is positive for x > 1",
        payload={"sections": [
            {"type": "grid_curvature", "jet": bf.jet_ln_f_thm2,
             "value": bf.ln_f_thm2, "sign": +1},
        ]}))

    # -- the sharp two-sided bound on the ratio ------------------------------
    add(ClaimCase(
        id="EQ9_SHARP", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(2), strictness="non_strict",
        expressions=("seq_s",),
        anchor="exp(a/(n ln^2 n)) <= v(n)^(1/(n ln n))/v(n+1)^(1/((n+1)ln(n+1)))"
               " < exp(b/(n ln^2 n)) with the sharp constants a, b",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("lower sharp constant a", _eq9_lower, False),
                       ("upper sharp constant b", _eq9_upper, True)]},
        ],
            "table": {"value": lambda n, c: c._m.exp(c.seq_s(n) - c.seq_s(n + 1)),
                      "lower": lambda n, c: c._m.exp(sharp_a(c._m) / _norm(n, c)),
                      "upper": lambda n, c: c._m.exp(sharp_b(c._m) / _norm(n, c))}}))

    # -- the increasing band function ----------------------------------------
    add(ClaimCase(
        id="EQ11_G_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=GridSpec(3, 200, 1024, "log"), strictness="strict",
        expressions=("G",),
        anchor="2/3 < G(x) < 1 for x >= 3; the lower constant sharpens to G(3)",
        payload={"sections": [
            {"type": "grid_sides",
             "sides": [("G > 2/3", _g_above_two_thirds, True),
                       ("G < 1", _g_below_one, True)]},
        ],
            "table": {"value": lambda x, ctx: bf.G(x, ctx),
                      "lower": lambda x, ctx: ctx.working().mpf(2) / 3,
                      "upper": lambda x, ctx: ctx.working().mpf(1)}}))

    add(ClaimCase(
        id="THM3_G_INC", kind=Kind.MONOTONE,
        domain=GridSpec(0.001, 1e6, 2048, "log"), strictness="strict",
        expressions=("G",),
        anchor="G is strictly increasing on (0, oo)",
        payload={"sections": [
            {"type": "grid_monotone", "jet": bf.jet_G, "value": bf.G,
             "increasing": True},
        ]}))

    add(ClaimCase(
        id="EQ13_LIMITS", kind=Kind.LIMIT,
        domain=IntRange(1, 8), strictness="non_strict",
        expressions=("G",),
        anchor="G(x) -> -oo as x -> 0+ and G(x) -> 1 as x -> oo",
        payload={"sections": [
            {"type": "divergence",
             "schedule": [10 ** -k for k in range(1, 9)],
             "value": lambda x, ctx: bf.G(ctx.working().convert(x), ctx),
             "below": -10},
            {"type": "limit",
             "schedule": [10 ** k for k in range(1, 7)],
             "value": lambda x, ctx: bf.G(ctx.working().mpf(x), ctx),
             "target": "1", "tol": 1e-2, "monotone_margin_to": 1},
        ]}))

    # -- conjecture scans -----------------------------------------------------
    add(ClaimCase(
        id="CONJ_FA_SIGNS", kind=Kind.DERIVATIVE_SIGNS,
        domain=DEFAULT_FUNCTION_GRID, strictness="strict",
        expressions=("F_a",), conjecture=True,
        anchor="(-1)^(n-1) F_a^(n)(x) > 0 for x > 1/a, scanned at bases a in {2, e, 10}",
        payload={"sections": [
            {"type": "scan", "label": f"a={label}",
             "jet": (lambda a: lambda x, K, ctx: bf.jet_F_a(a, x, K, ctx))(a_val),
             "pattern": _alt_sign, "max_order": 8,
             "grid": GridSpec(1.02 / a_val, 200, 2048, "log")}
            for label, a_val in (("2", 2.0), ("e", _E), ("10", 10.0))
        ]}))

    add(ClaimCase(
        id="CONJ_CM_1_MINUS_G", kind=Kind.DERIVATIVE_SIGNS,
        domain=DEFAULT_FUNCTION_GRID, strictness="strict",
        expressions=("G",), conjecture=True,
        anchor="(-1)^(k-1) G^(k)(x) > 0 on (0, oo), i.e. 1 - G is completely monotonic",
        payload={"sections": [
            {"type": "scan", "label": "1-G", "jet": bf.jet_G,
             "pattern": _alt_sign, "max_order": 8},
        ]}))

    add(ClaimCase(
        id="Q_LCM_SCAN", kind=Kind.DERIVATIVE_SIGNS,
        domain=GridSpec(0.001, 200, 2048, "log"), strictness="non_strict",
        expressions=("ln_Q",), conjecture=True, singular_points=(0,),
        anchor="(-1)^k (ln Q)^(k)(x) >= 0 on (-2, 0) and (0, oo): Q is"
               " logarithmically completely monotonic",
        payload={"sections": [
            {"type": "scan", "label": "x>0", "jet": bf.jet_ln_Q,
             "pattern": _cm_log_sign, "max_order": 8, "strict": False},
            {"type": "scan", "label": "-2<x<0", "jet": bf.jet_ln_Q,
             "pattern": _cm_log_sign, "max_order": 8, "strict": False,
             "grid": GridSpec(-1.999, -0.001, 512, "linear")},
        ]}))

    # -- ratio sequence of the roots -----------------------------------------
    add(ClaimCase(
        id="EQ17_RATIO", kind=Kind.LOG_CONVEX_SEQ,
        domain=IntRange(1), strictness="strict",
        expressions=("ln_Q",),
        anchor="v(n)^(1/n) / v(n+1)^(1/(n+1)) is strictly decreasing and strictly log-convex",
        payload={"sections": [
            {"type": "seq_monotone",
             "value": lambda n, c: c.ln_q(n) - c.ln_q(n + 1), "increasing": False},
            {"type": "seq_convex",
             "value": lambda n, c: c.ln_q(n) - c.ln_q(n + 1)},
        ]}))

    # -- the remark bands ------------------------------------------------------
    add(ClaimCase(
        id="EQ18_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1), strictness="non_strict",
        expressions=("ln_omega",),
        anchor="v(n+1)^(n/(n+1)) < v(n) <= (2/sqrt(pi))^n v(n+1)^(n/(n+1));"
               " right side is equality at n = 1",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("strict lower side", _eq18_lower, True),
                       ("non-strict upper side", _eq18_upper, False)]},
        ]}))

    add(ClaimCase(
        id="EQ18_VS_19", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(1, 4), strictness="strict",
        expressions=(),
        anchor="(2/sqrt(pi))^n < sqrt(e) exactly for n in {1, 2, 3, 4}",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("(2/sqrt(pi))^n < sqrt(e)", _eq18_vs_19, True)]},
        ]}))

    add(ClaimCase(
        id="EQ19_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1), strictness="non_strict",
        expressions=("ln_omega",),
        anchor="(2/sqrt(pi)) v(n+1)^(n/(n+1)) <= v(n) < sqrt(e) v(n+1)^(n/(n+1))",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("non-strict lower side", _eq19_lower, False),
                       ("strict upper side", _eq19_upper, True)]},
        ]}))

    add(ClaimCase(
        id="EQ21_BAND", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(3), strictness="strict",
        expressions=("ln_Q",),
        anchor="v(n+2)^(1/(n+2)) / v(n)^(1/n) < (n/(n+2))^(1/4) for n > 2",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("quarter-power bound", _eq21_gap, True)]},
        ]}))

    add(ClaimCase(
        id="EQ22_BAND", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(2), strictness="strict",
        expressions=("ln_omega",),
        anchor="v(n+5)^(1/(n+3)) / v(n+3)^(1/(n+1)) stays below its"
               " pi-weighted quarter-power bound for n >= 2",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("weighted bound", _eq22_gap, True)]},
        ]}))

    add(ClaimCase(
        id="EQ20_YAMING", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(1, len(_EQ20_DIRECT_BOX) + len(_EQ20_REVERSED_BOX)),
        strictness="strict",
        expressions=("lgamma",),
        anchor="the one-step gamma-ratio root quotient lies below"
               " sqrt((x+y)/(x+y+1)) when x > 1 > 0 and above it when 0 < x < 1",
        payload={"sections": [
            {"type": "box", "points": _EQ20_DIRECT_BOX,
             "sides": [("direct region", _eq20_direct, True)]},
            {"type": "box", "points": _EQ20_REVERSED_BOX,
             "sides": [("reversed region", _eq20_reversed, True)]},
        ]}))

    add(ClaimCase(
        id="EQ23_TJM", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1, len(_EQ23_BOX)), strictness="strict",
        expressions=("lgamma",),
        anchor="the t-step gamma-ratio root quotient sits between the a- and"
               " b-powers of (x+y+1)/(x+y+t+1) at the extreme admissible constants",
        payload={"sections": [
            {"type": "box", "points": _EQ23_BOX,
             "sides": [("lower power a", _eq23_lower, True),
                       ("upper power b", _eq23_upper, True)]},
        ]}))

    add(ClaimCase(
        id="EQ24_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1), strictness="strict",
        expressions=("ln_Q",),
        anchor="sqrt((n+2)/(n+4)) < v(n+2)^(1/(n+2))/v(n)^(1/n) < ((n+2)/(n+4))^(1/4)",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("lower half power", _eq24_lower, True),
                       ("upper quarter power", _eq24_upper, True)]},
        ]}))

    add(ClaimCase(
        id="EQ24_VS_21", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(3), strictness="strict",
        expressions=(),
        anchor="(n/(n+2))^(1/4) < ((n+2)/(n+4))^(1/4) for n >= 3: the two-step"
               " bound sharpens the quarter-power bound where both apply",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("bound comparison", _eq24_vs_21, True)]},
        ]}))

    add(ClaimCase(
        id="EQ25_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1, None, exclude=(2,)), strictness="strict",
        expressions=("ln_omega",),
        anchor="pi-weighted band around v(n+2)^(1/n)/v(n)^(1/(n-2)); n = 2"
               " is excluded by the defining substitution",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("weighted lower side", _eq25_lower, True),
                       ("weighted upper side", _eq25_upper, True)]},
        ]}))

    add(ClaimCase(
        id="EQ26_BAND", kind=Kind.TWO_SIDED_INEQ,
        domain=IntRange(1), strictness="strict",
        expressions=("ratio_r",),
        anchor="sqrt((n+2)/(n+3)) < v(n+1)^(1/(n+1))/v(n)^(1/n) < ((n+2)/(n+3))^(1/4)",
        payload={"sections": [
            {"type": "seq_sides",
             "sides": [("lower half power", _eq26_lower, True),
                       ("upper quarter power", _eq26_upper, True)]},
        ],
            "table": {"value": _table_exp_ratio,
                      "lower": lambda n, c: c._m.sqrt(c._m.mpf(n + 2) / (n + 3)),
                      "upper": lambda n, c: c._m.power(
                          c._m.mpf(n + 2) / (n + 3), c._m.mpf(1) / 4)}}))

    add(ClaimCase(
        id="EQ26_REAL", kind=Kind.TWO_SIDED_INEQ,
        domain=GridSpec(-0.999, 0.999, 512, "linear"), strictness="strict",
        expressions=("ln_Q",), singular_points=(0,),
        anchor="the dimension-ratio band read as a real inequality on (-1, 1)"
               " via the continuous root extension",
        payload={"sections": [
            {"type": "grid_sides",
             "sides": [("lower half power", _eq26_real_lower, True),
                       ("upper quarter power", _eq26_real_upper, True)]},
        ]}))

    # -- auxiliary lemma bands --------------------------------------------------
    add(ClaimCase(
        id="LEM1", kind=Kind.TWO_SIDED_INEQ,
        domain=GridSpec(0.05, 1e4, 512, "log"), strictness="strict",
        expressions=("digamma", "polygamma"),
        anchor="ln x - 1/x < psi(x) < ln x - 1/(2x) and the two-sided"
               " factorial envelopes of |psi^(k)|, k <= 5",
        payload={"sections": [
            {"type": "grid_sides", "sides": _lem1_sides()},
        ]}))

    add(ClaimCase(
        id="LEM2", kind=Kind.ONE_SIDED_INEQ,
        domain=GridSpec(0.01, 100, 512, "log"), strictness="strict",
        expressions=("lgamma",), singular_points=(1,),
        anchor="(1+1/x)^x exceeds (x+1)/Gamma(x+1)^(1/x) for x > 1 and"
               " falls below it for 0 < x < 1",
        payload={"sections": [
            {"type": "grid_sides", "grid": GridSpec(1, 100, 256, "log"),
             "sides": [("x > 1 direction", gs.euler_vs_gamma_log_gap, True)]},
            {"type": "grid_sides", "grid": GridSpec(0.01, 1, 256, "log"),
             "sides": [("0 < x < 1 reversal",
                        lambda x, ctx: -gs.euler_vs_gamma_log_gap(x, ctx), True)]},
        ]}))

    add(ClaimCase(
        id="LEM3", kind=Kind.TWO_SIDED_INEQ,
        domain=GridSpec(1e-6, 100, 512, "log"), strictness="strict",
        expressions=(),
        anchor="2t/(2+t) < ln(1+t) < t(2+t)/(2(1+t)) for t > 0, both reversed"
               " on (-1, 0)",
        payload={"sections": [
            {"type": "grid_sides",
             "sides": [("lower bound", _lem3_low, True),
                       ("upper bound", _lem3_high, True)]},
            {"type": "grid_sides", "grid": GridSpec(-0.999, -0.001, 256, "linear"),
             "sides": [("lower bound reversed",
                        lambda t, ctx: -_lem3_low(t, ctx), True),
                       ("upper bound reversed",
                        lambda t, ctx: -_lem3_high(t, ctx), True)]},
        ]}))

    # -- proof-cascade delegations ------------------------------------------------
    add(ClaimCase(
        id="CASCADE_SPOT_VALUES", kind=Kind.SPOT_VALUES,
        domain=IntRange(1, 16), strictness="non_strict",
        expressions=("eval_cascade",),
        anchor="every quoted auxiliary-function evaluation matches its closed form",
        payload={"sections": [
            {"type": "delegate",
             "run": lambda ctx, pts: cascade.verify_spot_values(ctx)},
        ]}))

    add(ClaimCase(
        id="CASCADE_CHAIN_IDENTITIES", kind=Kind.CHAIN_IDENTITY,
        domain=GridSpec(0.5, 50, 513, "log"), strictness="strict",
        expressions=("eval_cascade",), singular_points=(0.5,),
        anchor="every displayed derivative relation between the auxiliary"
               " functions holds as a jet residual",
        payload={"sections": [
            {"type": "delegate",
             "run": lambda ctx, pts: cascade.verify_chain_identities(pts, ctx)},
        ]}))

    add(ClaimCase(
        id="CASCADE_SIGN_CLAIMS", kind=Kind.CHAIN_IDENTITY,
        domain=GridSpec(0.002, 50, 512, "log"), strictness="strict",
        expressions=("eval_cascade",),
        anchor="the sign pattern asserted along both auxiliary-function chains",
        payload={"sections": [
            {"type": "delegate",
             "run": lambda ctx, pts: cascade.verify_sign_claims(pts, ctx)},
        ]}))

    # -- open problem ---------------------------------------------------------------
    add(ClaimCase(
        id="EQ27_OPEN", kind=Kind.ONE_SIDED_INEQ,
        domain=IntRange(1), strictness="non_strict",
        expressions=("ln_Q",), conjecture=True,
        anchor="sharp-constant search box for the one-step root-ratio band;"
               " the (alpha=2, lambda=1, a=3 | beta=4, mu=1, b=3) instance is feasible",
        payload={"sections": [{"type": "search_instance"}]}))

    return {c.id: c for c in cases}


_REGISTRY: Optional[dict[str, ClaimCase]] = None


def registry() -> dict[str, ClaimCase]:
    """All registered claims, in registration order, keyed by id."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


# Coverage of the source's numbered displays: each display number maps to the
# ids that check it, or to a note saying why nothing is checkable.
EQUATION_COVERAGE: dict[int, object] = {
    1: "definition of the half-argument log-gamma ratio; its monotonicity is EQ2_INC",
    2: ("EQ2_INC", "EQ3_LIMIT"),
    3: "definition of the gamma integral; no relation to check",
    4: ("EQ4_LIMIT", "SERIES_PROBE"),
    5: "definition of the unit-ball volume; closed forms pinned in unit tests",
    6: ("EQ6_AQ_SIGNS",),
    7: ("EQ7_AQ_RANGE",),
    8: "definition of the half-log ratio; claims under THM1_*",
    9: ("EQ9_SHARP",),
    10: ("EQ9_SHARP",),
    11: ("EQ11_G_BAND",),
    12: "product rewrite of the band function; form agreement pinned in unit tests",
    13: ("EQ13_LIMITS", "THM3_G_INC"),
    14: "definition of the general-base ratio; conjectured signs under CONJ_FA_SIGNS",
    15: ("CONJ_FA_SIGNS",),
    16: ("Q_LCM_SCAN",),
    17: ("EQ17_RATIO", "OMEGA_1N_DEC_LOGCONVEX"),
    18: ("EQ18_BAND",),
    19: ("EQ19_BAND", "EQ18_VS_19"),
    20: ("EQ20_YAMING",),
    21: ("EQ21_BAND",),
    22: ("EQ22_BAND",),
    23: ("EQ23_TJM",),
    24: ("EQ24_BAND", "EQ24_VS_21"),
    25: ("EQ25_BAND",),
    26: ("EQ26_BAND", "EQ26_REAL"),
    27: ("EQ27_OPEN",),
}
