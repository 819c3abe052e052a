"""Log-gamma, digamma and polygamma at arbitrary precision.

The implementation is the classical one: shift the argument upward with the
recurrence until it clears a precision-dependent threshold, then sum the
Stirling/asymptotic series with exact Bernoulli-number coefficients, stopping
once the next term falls below the target error (the first omitted term
bounds the tail of these enveloping series).

Two-sided envelopes for psi and its derivatives, plus two classical log
inequalities, live here as independent sanity bounds; they double as
registry claims (LEM1/LEM2/LEM3).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .realcore import (
    GUARD_BITS,
    DomainError,
    PrecisionContext,
    mpctx,
)

MAX_POLYGAMMA_ORDER = 16
MAX_BERNOULLI_INDEX = 512

# ---------------------------------------------------------------------------
# Bernoulli numbers (exact rationals, write-once cache)

_BERNOULLI: list[Fraction] = [Fraction(1)]


def bernoulli_fraction(n: int) -> Fraction:
    """Exact Bernoulli number B_n via the defining recurrence, cached."""
    if n < 0:
        raise DomainError("bernoulli", n, "index must be non-negative")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        # B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * _BERNOULLI[k]
        _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def bernoulli(two_m: int, ctx: PrecisionContext):
    """B_{2m} rendered at working precision; index must be even and <= 512."""
    if two_m <= 0 or two_m % 2 != 0:
        raise DomainError("bernoulli", two_m, "index must be a positive even integer")
    if two_m > MAX_BERNOULLI_INDEX:
        raise DomainError("bernoulli", two_m, f"index exceeds {MAX_BERNOULLI_INDEX}")
    b = bernoulli_fraction(two_m)
    m = ctx.mp
    return m.mpf(b.numerator) / m.mpf(b.denominator)


# Stirling-series coefficients rendered per working precision, keyed by
# (kind, wp). Lists grow append-only, so concurrent readers are safe.
_COEFF_CACHE: dict[tuple, list] = {}


def _coeffs(kind: str, k: int, wp: int, count: int) -> list:
    """First ``count`` series coefficients for the given sum, as wp-bit mpf.

    kind 'lgamma': B_{2j} / (2j (2j-1));  kind 'psi': B_{2j} / (2j);
    kind 'poly':   B_{2j} * (2j+k-1)! / (2j)!   (for psi^{(k)}, k >= 1).
    """
    key = (kind, k, wp)
    cached = _COEFF_CACHE.get(key)
    if cached is None:
        cached = []
        _COEFF_CACHE[key] = cached
    m = mpctx(wp)
    while len(cached) < count:
        j = len(cached) + 1
        if 2 * j > MAX_BERNOULLI_INDEX:
            raise DomainError("stirling", 2 * j,
                              "series needs Bernoulli index beyond the table ceiling")
        b = bernoulli_fraction(2 * j)
        if kind == "lgamma":
            frac = b / (2 * j * (2 * j - 1))
        elif kind == "psi":
            frac = b / (2 * j)
        else:
            frac = b * Fraction(math.factorial(2 * j + k - 1), math.factorial(2 * j))
        cached.append(m.mpf(frac.numerator) / m.mpf(frac.denominator))
    return cached


def shift_threshold(bits: int) -> int:
    """Argument size above which the Stirling tail stays below 2**(-bits).

    Above ~2500 bits the Bernoulli table ceiling (index 512, i.e. 250-odd
    series terms) becomes the binding constraint, so the threshold grows to
    keep the 250th term under the target error.
    """
    t = max(32, bits // 4)
    if bits > 1024:
        capped = math.exp((bits * math.log(2) + math.lgamma(499) + 140) / 499)
        t = max(t, int(capped / (2 * math.pi)) + 1)
    return t


def _sum_series(kind: str, k: int, y, wp: int):
    """Sum the asymptotic series in 1/y^2, truncating by the relative-size rule.

    Stops when |term| < 2**(-wp-4) * |partial sum|; for arguments above
    shift_threshold(wp) the enveloping property makes the first omitted term
    an upper bound for the tail, so the truncation error is absorbed by the
    guard bits.
    """
    m = mpctx(wp)
    u = 1 / (y * y)
    # Running power, pre-multiplied by u each iteration:
    #   lgamma: y^(1-2j)  psi: y^(-2j)  poly: y^(-(2j+k))
    if kind == "lgamma":
        w = y
    elif kind == "psi":
        w = m.mpf(1)
    else:
        w = m.power(y, -k)
    total = m.mpf(0)
    j = 0
    while True:
        j += 1
        coeffs = _coeffs(kind, k, wp, j)
        w = w * u
        term = coeffs[j - 1] * w
        total += term
        if abs(term) <= m.ldexp(abs(total), -wp - 4):
            return total


def _lgamma_raw(x, wp: int):
    """ln Gamma(x) for x already above the shift threshold."""
    m = mpctx(wp)
    lx = m.ln(x)
    base = (x - m.mpf(1) / 2) * lx - x + m.ln(2 * m.pi) / 2
    return base + _sum_series("lgamma", 0, x, wp)


def _psi_raw(x, wp: int):
    """psi(x) for x above the shift threshold."""
    m = mpctx(wp)
    return m.ln(x) - 1 / (2 * x) - _sum_series("psi", 0, x, wp)


def _polygamma_raw(k: int, x, wp: int):
    """psi^(k)(x), k >= 1, for x above the shift threshold."""
    m = mpctx(wp)
    fk = m.mpf(math.factorial(k))
    fk1 = m.mpf(math.factorial(k - 1))
    xk = m.power(x, -k)
    body = fk1 * xk + fk * xk / (2 * x) + _sum_series("poly", k, x, wp)
    return body if k % 2 == 1 else -body


def _validated(x, ctx: PrecisionContext, op: str):
    m = ctx.working()
    xv = m.convert(x)
    if not m.isfinite(xv) or xv <= 0:
        raise DomainError(op, x, "requires argument > 0")
    return m, xv


def lgamma(x, ctx: PrecisionContext, threshold: int | None = None):
    """ln Gamma(x) for x > 0, relative error <= 2**(8 - bits).

    ``threshold`` overrides the shift threshold (used by consistency tests).
    """
    m, xv = _validated(x, ctx, "lgamma")
    wp = ctx.bits + GUARD_BITS
    t = threshold if threshold is not None else shift_threshold(wp)
    shift = 0
    if xv < t:
        shift = int(m.ceil(t - xv))
    acc = m.mpf(0)
    for j in range(shift):
        acc += m.ln(xv + j)
    return _lgamma_raw(xv + shift, wp) - acc


def digamma(x, ctx: PrecisionContext, threshold: int | None = None):
    """psi(x) for x > 0; always inside the band (ln x - 1/x, ln x - 1/(2x))."""
    m, xv = _validated(x, ctx, "digamma")
    wp = ctx.bits + GUARD_BITS
    t = threshold if threshold is not None else shift_threshold(wp)
    shift = 0
    if xv < t:
        shift = int(m.ceil(t - xv))
    acc = m.mpf(0)
    for j in range(shift):
        acc += 1 / (xv + j)
    val = _psi_raw(xv + shift, wp) - acc
    if __debug__:
        lx = m.ln(xv)
        assert lx - 1 / xv < val < lx - 1 / (2 * xv), f"psi({xv}) outside envelope"
    return val


def polygamma(k: int, x, ctx: PrecisionContext, threshold: int | None = None):
    """psi^(k)(x) for x > 0 and 1 <= k <= 16; sign is (-1)^(k+1)."""
    if not 1 <= k <= MAX_POLYGAMMA_ORDER:
        raise DomainError("polygamma", k,
                          f"order must be in [1, {MAX_POLYGAMMA_ORDER}]")
    m, xv = _validated(x, ctx, "polygamma")
    wp = ctx.bits + GUARD_BITS
    t = threshold if threshold is not None else shift_threshold(wp)
    shift = 0
    if xv < t:
        shift = int(m.ceil(t - xv))
    acc = m.mpf(0)
    for j in range(shift):
        acc += m.power(xv + j, -(k + 1))
    fk = m.mpf(math.factorial(k))
    # psi^(k)(x) = psi^(k)(x + s) + (-1)^(k+1) k! sum 1/(x+j)^(k+1)
    corr = fk * acc if k % 2 == 1 else -fk * acc
    val = _polygamma_raw(k, xv + shift, wp) + corr
    if __debug__:
        lo, hi = polygamma_envelope(k, xv, ctx)
        mag = val if k % 2 == 1 else -val
        assert lo < mag < hi, f"psi^({k})({xv}) outside envelope"
    return val


def lgamma_derivs(max_k: int, x, ctx: PrecisionContext) -> list:
    """[ln Gamma(x), psi(x), psi'(x), ..., psi^(max_k - 1)(x)] in one pass.

    The upward shift is computed once and shared across orders, which is what
    makes high-order jet scans affordable on dense grids.
    """
    if max_k - 1 > MAX_POLYGAMMA_ORDER:
        raise DomainError("lgamma_derivs", max_k,
                          f"needs polygamma order {max_k - 1} > {MAX_POLYGAMMA_ORDER}")
    m, xv = _validated(x, ctx, "lgamma_derivs")
    wp = ctx.bits + GUARD_BITS
    t = shift_threshold(wp)
    shift = int(m.ceil(t - xv)) if xv < t else 0

    inv = []
    ln_acc = m.mpf(0)
    for j in range(shift):
        ln_acc += m.ln(xv + j)
        inv.append(1 / (xv + j))

    y = xv + shift
    out = [_lgamma_raw(y, wp) - ln_acc]
    if max_k >= 1:
        out.append(_psi_raw(y, wp) - m.fsum(inv))
    powers = list(inv)
    for k in range(1, max_k):
        powers = [p * v for p, v in zip(powers, inv)]
        fk = m.mpf(math.factorial(k))
        corr = fk * m.fsum(powers)
        if k % 2 == 0:
            corr = -corr
        out.append(_polygamma_raw(k, y, wp) + corr)
    return out


# ---------------------------------------------------------------------------
# Envelopes and classical log bounds (sanity bands, re-exported as claims)

def psi_envelope(x, ctx: PrecisionContext):
    """Lower/upper bounds ln x - 1/x < psi(x) < ln x - 1/(2x)."""
    m = ctx.working()
    xv = m.convert(x)
    lx = m.ln(xv)
    return lx - 1 / xv, lx - 1 / (2 * xv)


def polygamma_envelope(k: int, x, ctx: PrecisionContext):
    """Bounds on (-1)^(k+1) psi^(k): (k-1)!/x^k + k!/(2x^(k+1)) and ... k!/x^(k+1)."""
    m = ctx.working()
    xv = m.convert(x)
    fk1 = m.mpf(math.factorial(k - 1))
    fk = m.mpf(math.factorial(k))
    xk = m.power(xv, -k)
    lo = fk1 * xk + fk * xk / (2 * xv)
    hi = fk1 * xk + fk * xk / xv
    return lo, hi


def euler_vs_gamma_log_gap(x, ctx: PrecisionContext):
    """ln of (1+1/x)^x minus ln of (x+1)/Gamma(x+1)^(1/x).

    Positive for x > 1 and negative for 0 < x < 1 (zero at x = 1).
    """
    m, xv = _validated(x, ctx, "euler_vs_gamma_log_gap")
    lg = lgamma(xv + 1, ctx)
    return xv * (m.ln(xv + 1) - m.ln(xv)) - (m.ln(xv + 1) - lg / xv)


def log_bound_gaps(t, ctx: PrecisionContext):
    """Gaps (ln(1+t) - 2t/(2+t),  t(2+t)/(2(1+t)) - ln(1+t)).

    Both positive for t > 0; both negative for -1 < t < 0.
    """
    m = ctx.working()
    tv = m.convert(t)
    if tv <= -1:
        raise DomainError("log_bound_gaps", t, "requires t > -1")
    l = m.ln(1 + tv)
    return l - 2 * tv / (2 + tv), tv * (2 + tv) / (2 * (1 + tv)) - l
