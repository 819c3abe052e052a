"""Order-K truncated Taylor (jet) arithmetic for exact higher derivatives.

A jet stores the Taylor coefficients (c_0, ..., c_K) of a function expanded
at a point, so the m-th derivative is m! * c_m. Arithmetic propagates
coefficients through the standard convolution recurrences; log-gamma and
polygamma enter through their primitive derivative sequences composed with
the inner jet. Everything is univariate and capped at order 16.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gammaspec import MAX_POLYGAMMA_ORDER, lgamma_derivs
from .realcore import DomainError, GUARD_BITS, PrecisionContext, mpctx

MAX_JET_ORDER = 16


@dataclass(frozen=True)
class Jet:
    """Taylor coefficients c_0..c_K at a common expansion point; wp = work bits."""

    coeffs: tuple
    wp: int

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self):
        return self.coeffs[0]

    def _m(self):
        return mpctx(self.wp)

    def __add__(self, other):
        a, b = _align(self, other)
        return Jet(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.wp)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = _align(self, other)
        return Jet(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.wp)

    def __rsub__(self, other):
        a, b = _align(self, other)
        return Jet(tuple(y - x for x, y in zip(a.coeffs, b.coeffs)), a.wp)

    def __neg__(self):
        return Jet(tuple(-x for x in self.coeffs), self.wp)

    def __mul__(self, other):
        a, b = _align(self, other)
        return _mul(a, b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = _align(self, other)
        return _div(a, b)

    def __rtruediv__(self, other):
        a, b = _align(self, other)
        return _div(b, a)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError("jet_pow", n, "integer power must be non-negative")
        m = self._m()
        out = constant_jet(m.mpf(1), self.order, self.wp)
        base = self
        e = n
        while e:
            if e & 1:
                out = _mul(out, base)
            base = _mul(base, base)
            e >>= 1
        return out


def constant_jet(value, order: int, wp: int) -> Jet:
    m = mpctx(wp)
    zero = m.mpf(0)
    return Jet((m.convert(value),) + (zero,) * order, wp)


def _align(a, b) -> tuple[Jet, Jet]:
    """Lift scalars to constant jets; require matching order for jet pairs."""
    if isinstance(a, Jet) and isinstance(b, Jet):
        if a.order != b.order:
            raise DomainError("jet_arith", (a.order, b.order), "orders must match")
        return a, b
    if isinstance(a, Jet):
        return a, constant_jet(b, a.order, a.wp)
    return constant_jet(a, b.order, b.wp), b


def _mul(a: Jet, b: Jet) -> Jet:
    m = a._m()
    K = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(K + 1):
        out.append(m.fsum(ac[i] * bc[k - i] for i in range(k + 1)))
    return Jet(tuple(out), a.wp)


def _div(a: Jet, b: Jet) -> Jet:
    if b.coeffs[0] == 0:
        raise DomainError("jet_div", b.coeffs[0], "division by jet with zero constant term")
    m = a._m()
    K = a.order
    ac, bc = a.coeffs, b.coeffs
    out = [ac[0] / bc[0]]
    for k in range(1, K + 1):
        s = ac[k] - m.fsum(out[i] * bc[k - i] for i in range(k))
        out.append(s / bc[0])
    return Jet(tuple(out), a.wp)


def jet_var(x, K: int, ctx: PrecisionContext) -> Jet:
    """The identity jet at x: coefficients (x, 1, 0, ..., 0)."""
    if not 0 <= K <= MAX_JET_ORDER:
        raise DomainError("jet_var", K, f"order must be in [0, {MAX_JET_ORDER}]")
    wp = ctx.bits + GUARD_BITS
    m = mpctx(wp)
    zero = m.mpf(0)
    coeffs = (m.convert(x),) + ((m.mpf(1),) + (zero,) * (K - 1) if K else ())
    return Jet(coeffs, wp)


def jet_ln(a: Jet) -> Jet:
    """ln of a jet; requires positive constant term."""
    if a.coeffs[0] <= 0:
        raise DomainError("jet_ln", a.coeffs[0], "requires positive constant term")
    m = a._m()
    K = a.order
    ac = a.coeffs
    out = [m.ln(ac[0])]
    for k in range(1, K + 1):
        s = ac[k] - m.fsum(m.mpf(j) * out[j] * ac[k - j] for j in range(1, k)) / k
        out.append(s / ac[0])
    return Jet(tuple(out), a.wp)


def jet_exp(a: Jet) -> Jet:
    m = a._m()
    K = a.order
    ac = a.coeffs
    out = [m.exp(ac[0])]
    for k in range(1, K + 1):
        out.append(m.fsum(m.mpf(j) * ac[j] * out[k - j] for j in range(1, k + 1)) / k)
    return Jet(tuple(out), a.wp)


def jet_pow_const(a: Jet, r) -> Jet:
    """a ** r for a constant real exponent r; requires positive constant term."""
    if a.coeffs[0] <= 0:
        raise DomainError("jet_pow_const", a.coeffs[0], "requires positive constant term")
    m = a._m()
    rv = m.convert(r)
    K = a.order
    ac = a.coeffs
    out = [m.power(ac[0], rv)]
    for k in range(1, K + 1):
        s = m.fsum((rv * (k - j) - j) * ac[k - j] * out[j] for j in range(k))
        out.append(s / (k * ac[0]))
    return Jet(tuple(out), a.wp)


def _compose_outer(derivs: list, a: Jet) -> Jet:
    """Compose an outer function, given its derivatives at a.value, with jet a.

    ``derivs[m]`` is the m-th derivative of the outer function at the inner
    constant term; composition runs Horner-style on the shifted jet.
    """
    m = a._m()
    K = a.order
    shifted = Jet((m.mpf(0),) + a.coeffs[1:], a.wp)
    fact = 1
    outer = []
    for j, d in enumerate(derivs):
        if j:
            fact *= j
        outer.append(m.convert(d) / fact)
    out = constant_jet(outer[K], K, a.wp)
    for j in range(K - 1, -1, -1):
        out = _mul(out, shifted)
        out = Jet((out.coeffs[0] + outer[j],) + out.coeffs[1:], a.wp)
    return out


def jet_lgamma(a: Jet, ctx: PrecisionContext) -> Jet:
    """ln Gamma of a jet via the (ln Gamma, psi, psi', ...) derivative sequence."""
    if a.coeffs[0] <= 0:
        raise DomainError("jet_lgamma", a.coeffs[0], "requires positive constant term")
    derivs = lgamma_derivs(a.order, a.coeffs[0], ctx)
    return _compose_outer(derivs, a)


def jet_polygamma(k: int, a: Jet, ctx: PrecisionContext) -> Jet:
    """psi^(k) of a jet, k >= 0; needs polygamma orders up to k + jet order."""
    top = k + a.order
    if top > MAX_POLYGAMMA_ORDER:
        raise DomainError("jet_polygamma", top,
                          f"needs polygamma order beyond {MAX_POLYGAMMA_ORDER}")
    derivs = lgamma_derivs(top + 1, a.coeffs[0], ctx)[k + 1:]
    return _compose_outer(derivs, a)


def derivative(a: Jet, m: int):
    """m-th derivative carried by the jet: m! * c_m."""
    if not 0 <= m <= a.order:
        raise DomainError("derivative", m, f"jet only carries orders 0..{a.order}")
    return a._m().mpf(math.factorial(m)) * a.coeffs[m]


# Spec-surface dispatchers over the operator forms above.

def jet_arith(op: str, a: Jet, b: Jet) -> Jet:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise DomainError("jet_arith", op, "expected add, sub, mul or div")


def jet_fn(op: str, a: Jet, exponent=None) -> Jet:
    if op == "ln":
        return jet_ln(a)
    if op == "exp":
        return jet_exp(a)
    if op == "pow_const":
        if exponent is None:
            raise DomainError("jet_fn", op, "pow_const needs an exponent")
        return jet_pow_const(a, exponent)
    raise DomainError("jet_fn", op, "expected ln, exp or pow_const")
