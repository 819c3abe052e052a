"""Arbitrary-precision reals, elementary functions, and strict-sign certification.

Values are binary floating-point numbers (mpmath ``mpf``) whose operations run
at an explicit bit count taken from an immutable :class:`PrecisionContext`.
Every elementary operation at precision ``p`` bits has relative error at most
``2**(3 - p)``; sign decisions are made only when a value clears a margin of
``2**(6 - p)`` times its scale, escalating precision geometrically otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from mpmath.ctx_mp import MPContext

DEFAULT_BITS = 256
DEFAULT_MAX_BITS = 4096

# Extra working bits used internally by evaluation routines so that chained
# expressions stay well under the 2**(6-bits) sign margin.
GUARD_BITS = 48

# Sign margin exponent: 3 guard bits of slack over the per-op 2**(3-p) bound,
# sized for expressions chaining ~10 elementary operations.
MARGIN_EXP = 6


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""

    def __init__(self, op: str, argument, detail: str = ""):
        self.op = op
        self.argument = argument
        msg = f"{op}: argument {argument} outside domain"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class SingularPointError(DomainError):
    """An argument hits an isolated singular point of a function."""


_MP_CACHE: dict[int, MPContext] = {}


def mpctx(bits: int) -> MPContext:
    """Return a cached mpmath context with ``bits`` of binary precision.

    Contexts are created once per bit count and never mutated afterwards, so
    they are safe to share between concurrent workers.
    """
    ctx = _MP_CACHE.get(bits)
    if ctx is None:
        ctx = MPContext()
        ctx.prec = bits
        _MP_CACHE[bits] = ctx
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Immutable working precision plus escalation policy.

    ``bits`` is the precision at which results are certified; internal
    evaluation may carry :data:`GUARD_BITS` extra bits.
    """

    bits: int = DEFAULT_BITS
    max_bits: int = DEFAULT_MAX_BITS
    escalation_factor: int = 2

    def __post_init__(self):
        if self.bits <= 0:
            raise ValueError(f"bits must be positive, got {self.bits}")
        if self.bits > self.max_bits:
            raise ValueError(f"bits {self.bits} exceeds max_bits {self.max_bits}")
        if self.escalation_factor < 2:
            raise ValueError("escalation_factor must be >= 2")

    @property
    def mp(self) -> MPContext:
        """mpmath context at exactly ``bits`` precision."""
        return mpctx(self.bits)

    def working(self, extra: int = GUARD_BITS) -> MPContext:
        """mpmath context padded with ``extra`` guard bits."""
        return mpctx(self.bits + extra)

    def mpf(self, x):
        """Convert ``x`` to an mpf at this context's precision."""
        return self.mp.convert(x)

    def escalated(self) -> "PrecisionContext | None":
        """Next context in the escalation schedule, or None at the ceiling."""
        if self.bits >= self.max_bits:
            return None
        nxt = min(self.bits * self.escalation_factor, self.max_bits)
        return PrecisionContext(nxt, self.max_bits, self.escalation_factor)


def new_context(bits: int = DEFAULT_BITS, max_bits: int = DEFAULT_MAX_BITS,
                escalation_factor: int = 2) -> PrecisionContext:
    """Create an immutable precision context; rejects bits <= 0 or bits > max_bits."""
    return PrecisionContext(bits, max_bits, escalation_factor)


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SignVerdict:
    """Certified sign of a value: the sign, its margin, and the bits used.

    ``POSITIVE`` certifies value > margin > 0 (symmetrically for
    ``NEGATIVE``); ``INCONCLUSIVE`` is returned only after escalating to the
    context ceiling and indicates a boundary equality or an undecidable sign.
    """

    sign: Sign
    margin: object  # mpf; distance from zero at the final precision
    bits_used: int

    @property
    def is_positive(self) -> bool:
        return self.sign is Sign.POSITIVE

    @property
    def is_negative(self) -> bool:
        return self.sign is Sign.NEGATIVE

    @property
    def is_inconclusive(self) -> bool:
        return self.sign is Sign.INCONCLUSIVE


def sign_threshold(x, bits: int):
    """Margin a value must clear at ``bits`` for its sign to be trusted."""
    m = mpctx(bits)
    scale = abs(x)
    one = m.mpf(1)
    if scale < one:
        scale = one
    return m.ldexp(scale, MARGIN_EXP - bits)


def sign_with_margin(x, ctx: PrecisionContext,
                     recompute: Callable[[PrecisionContext], object]) -> SignVerdict:
    """Certify the sign of ``x``, escalating precision until it clears the margin.

    ``recompute(ctx2)`` must re-evaluate the same quantity at the precision of
    ``ctx2``. The verdict is a pure function of the thunk and the context:
    the escalation schedule is deterministic, and a POSITIVE verdict at some
    precision can only sharpen, never flip, at higher precision.
    """
    cur = ctx
    val = x
    while True:
        thresh = sign_threshold(val, cur.bits)
        if val > thresh:
            return SignVerdict(Sign.POSITIVE, abs(val), cur.bits)
        if val < -thresh:
            return SignVerdict(Sign.NEGATIVE, abs(val), cur.bits)
        nxt = cur.escalated()
        if nxt is None:
            return SignVerdict(Sign.INCONCLUSIVE, abs(val), cur.bits)
        cur = nxt
        val = recompute(cur)


_CONSTANTS = ("pi", "e", "euler_gamma")


def constant(name: str, ctx: PrecisionContext):
    """Mathematical constant (pi, e, euler_gamma) correct to working precision."""
    m = ctx.mp
    if name == "pi":
        return +m.pi
    if name == "e":
        return +m.e
    if name == "euler_gamma":
        return +m.euler
    raise DomainError("constant", name, f"expected one of {_CONSTANTS}")


def elementary(op: str, *args, ctx: PrecisionContext):
    """Elementary function dispatcher: ln, exp, pow, sqrt.

    Results carry relative error <= 2**(3 - bits). Domain violations raise
    :class:`DomainError` naming the operation and the offending argument.
    """
    m = ctx.mp
    vals = [m.convert(a) for a in args]
    for v in vals:
        if not m.isfinite(v):
            raise DomainError(op, v, "operands must be finite")
    if op == "ln":
        (x,) = vals
        if x <= 0:
            raise DomainError("ln", x, "requires argument > 0")
        return m.ln(x)
    if op == "exp":
        (x,) = vals
        return m.exp(x)
    if op == "sqrt":
        (x,) = vals
        if x < 0:
            raise DomainError("sqrt", x, "requires argument >= 0")
        return m.sqrt(x)
    if op == "pow":
        x, y = vals
        if x <= 0 and y != m.floor(y):
            raise DomainError("pow", x, "requires base > 0 for non-integer exponent")
        if x == 0 and y < 0:
            raise DomainError("pow", x, "zero base with negative exponent")
        return m.power(x, y)
    raise DomainError("elementary", op, "expected one of ln, exp, pow, sqrt")
