"""Claim-registry data types: grids, cases, reports, verdicts.

A ClaimCase is one verifiable statement (inequality, monotonicity, convexity,
limit, or derivative-sign pattern) over an explicit finite domain; checking
one produces a CheckReport whose "verified" always means "verified on this
grid with this margin". Conjecture scans use the distinct consistent-with /
refuted-at-witness vocabulary so that a grid scan is never mistaken for a
proof.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .realcore import DomainError, PrecisionContext, mpctx


class Verdict(enum.Enum):
    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    BOUNDARY_EQUALITY = "boundary_equality"
    INCONCLUSIVE = "inconclusive"
    CONSISTENT_WITH = "consistent-with"
    REFUTED = "refuted-at-witness"

    @property
    def is_failure(self) -> bool:
        return self in (Verdict.COUNTEREXAMPLE, Verdict.REFUTED)

    @property
    def is_success(self) -> bool:
        return self in (Verdict.VERIFIED, Verdict.BOUNDARY_EQUALITY,
                        Verdict.CONSISTENT_WITH)


class Kind(enum.Enum):
    TWO_SIDED_INEQ = "two_sided_ineq"
    ONE_SIDED_INEQ = "one_sided_ineq"
    MONOTONE = "monotone"
    CONCAVE = "concave"
    LOG_CONVEX_SEQ = "log_convex_seq"
    LIMIT = "limit"
    DERIVATIVE_SIGNS = "derivative_signs"
    SPOT_VALUES = "spot_values"
    CHAIN_IDENTITY = "chain_identity"


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid over a continuous domain."""

    start: float
    end: float
    count: int
    spacing: str = "log"  # "log" or "linear"

    def __post_init__(self):
        if self.count < 2:
            raise DomainError("GridSpec", self.count, "count must be >= 2")
        if not self.start < self.end:
            raise DomainError("GridSpec", (self.start, self.end), "requires start < end")
        if self.spacing not in ("log", "linear"):
            raise DomainError("GridSpec", self.spacing, "spacing must be log or linear")
        if self.spacing == "log" and self.start <= 0:
            raise DomainError("GridSpec", self.start, "log spacing requires start > 0")

    def points(self, bits: int) -> list:
        """Deterministic grid points as mpf values at the given precision."""
        m = mpctx(bits)
        a, b = m.convert(self.start), m.convert(self.end)
        n = self.count
        if self.spacing == "linear":
            step = (b - a) / (n - 1)
            return [a + i * step for i in range(n)]
        la, lb = m.ln(a), m.ln(b)
        step = (lb - la) / (n - 1)
        return [m.exp(la + i * step) for i in range(n)]

    def to_dict(self) -> dict:
        return {"start": self.start, "end": self.end,
                "count": self.count, "spacing": self.spacing}


@dataclass(frozen=True)
class IntRange:
    """Integer domain [start, end] with optional exclusions; end of None means
    "resolved from n_max at check time"."""

    start: int
    end: Optional[int] = None
    exclude: tuple = ()

    def resolved_end(self, n_max: Optional[int], n_default: int) -> int:
        if n_max is not None:
            return n_max  # explicit override, may extend a fixed window
        return self.end if self.end is not None else n_default

    def resolve(self, n_max: Optional[int], n_default: int) -> list[int]:
        end = self.resolved_end(n_max, n_default)
        return [n for n in range(self.start, end + 1) if n not in self.exclude]

    def to_dict(self, end: Optional[int] = None) -> dict:
        return {"start": self.start, "end": end if end is not None else self.end,
                "count": None, "spacing": "integer"}


@dataclass(frozen=True)
class ClaimCase:
    """One registered verifiable statement.

    ``payload`` holds the kind-specific evaluation hooks consumed by the
    checker; ``expressions`` names the library functions involved, and
    ``anchor`` states the claim in mathematical language.
    """

    id: str
    kind: Kind
    domain: object  # GridSpec | IntRange
    strictness: str  # "strict" | "non_strict"
    expressions: tuple
    anchor: str
    payload: dict = field(repr=False, default_factory=dict)
    conjecture: bool = False
    singular_points: tuple = ()

    def __post_init__(self):
        if not self.anchor:
            raise DomainError("ClaimCase", self.id, "anchor must be non-empty")
        if self.strictness not in ("strict", "non_strict"):
            raise DomainError("ClaimCase", self.strictness, "bad strictness")


@dataclass
class CheckReport:
    """Outcome of checking one claim on one grid at one precision."""

    id: str
    verdict: Verdict
    min_margin: object = None  # mpf | None
    witness: object = None     # mpf | int | str | None
    bits_used: int = 0
    grid: dict = field(default_factory=dict)
    anchor: str = ""
    boundary: list = field(default_factory=list)   # points with certified equality
    excluded: list = field(default_factory=list)   # points dropped near singularities
    notes: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)     # per-order/per-item sub-results


@dataclass(frozen=True)
class OpenProblemParams:
    """Constraint box of the sharp-constant open problem."""

    a: float
    b: float
    lam: float
    mu: float
    alpha: float
    beta: float

    def __post_init__(self):
        checks = [
            (self.a >= 3, "a >= 3"), (self.b <= 3, "b <= 3"),
            (self.lam <= 1, "lambda <= 1"), (self.mu >= 1, "mu >= 1"),
            (self.alpha >= 2, "alpha >= 2"), (self.beta <= 4, "beta <= 4"),
            (self.lam > 0, "lambda > 0"), (self.mu > 0, "mu > 0"),
            (self.b > 0, "b > 0"), (self.beta > 0, "beta > 0"),
        ]
        for ok, what in checks:
            if not ok:
                raise DomainError("OpenProblemParams", what, "constraint box violated")


# The instance known to reproduce the two-sided dimension-ratio bound exactly.
FEASIBLE_INSTANCE = OpenProblemParams(a=3, b=3, lam=1, mu=1, alpha=2, beta=4)
