"""Configurable-precision gamma/ball-volume functions with a claim-checking engine.

The library certifies strict-sign statements (inequalities, monotonicity,
convexity, limits, derivative-sign patterns) about the gamma function and the
volume of the n-dimensional unit ball on explicit finite grids, escalating
working precision until every sign clears its margin, and emits reproducible
reports through the ``ballcert`` command-line tool.
"""

from .ballfun import (
    AQ,
    F,
    F_a,
    G,
    MAX_DIMENSION,
    ln_Q,
    ln_f_thm2,
    ln_omega,
    ratio_r,
    seq_s,
    sequence_cache,
)
from .cascade import (
    eval_cascade,
    jet_cascade,
    verify_chain_identities,
    verify_sign_claims,
    verify_spot_values,
)
from .checker import (
    check_case,
    extrapolate_limit,
    scan_derivative_signs,
    search_open27,
)
from .claims import (
    CheckReport,
    ClaimCase,
    GridSpec,
    IntRange,
    Kind,
    OpenProblemParams,
    Verdict,
)
from .gammaspec import bernoulli, bernoulli_fraction, digamma, lgamma, polygamma
from .jets import Jet, derivative, jet_arith, jet_fn, jet_lgamma, jet_var
from .realcore import (
    DomainError,
    PrecisionContext,
    Sign,
    SignVerdict,
    SingularPointError,
    constant,
    elementary,
    new_context,
    sign_with_margin,
)
from .registry import EQUATION_COVERAGE, registry

__version__ = "0.1.0"

__all__ = [
    "AQ", "F", "F_a", "G", "MAX_DIMENSION", "ln_Q", "ln_f_thm2", "ln_omega",
    "ratio_r", "seq_s", "sequence_cache",
    "eval_cascade", "jet_cascade", "verify_chain_identities",
    "verify_sign_claims", "verify_spot_values",
    "check_case", "extrapolate_limit", "scan_derivative_signs", "search_open27",
    "CheckReport", "ClaimCase", "GridSpec", "IntRange", "Kind",
    "OpenProblemParams", "Verdict",
    "bernoulli", "bernoulli_fraction", "digamma", "lgamma", "polygamma",
    "Jet", "derivative", "jet_arith", "jet_fn", "jet_lgamma", "jet_var",
    "DomainError", "PrecisionContext", "Sign", "SignVerdict",
    "SingularPointError", "constant", "elementary", "new_context",
    "sign_with_margin",
    "EQUATION_COVERAGE", "registry",
]
