"""Finite trigonometric sums, Dedekind sums, and mechanical identity verification.

The package evaluates sums of the form

    S[n,m,l](p,q,r) = sum_{k=1}^{p-1} cos(pi*k*r/p)^n / (sin(pi*k*q/p)^m * sin(pi*k/p)^l)

with rigorous error bounds, computes Dedekind sums exactly as rationals, and
checks a catalog of closed-form identities against definition-based values,
classifying each as PASS, FAIL, or INCONCLUSIVE.
"""

from .dedekind import (
    dedekind_closed_pq,
    dedekind_closed_q1,
    dedekind_def,
    dedekind_fast,
    dedekind_fractional_form,
    dedekind_sawtooth_form,
)
from .exact import Rational, binomial, frac, gcd, sawtooth
from .identities import (
    APPROXIMATE,
    EXACT,
    FAIL,
    INCONCLUSIVE,
    PASS,
    Identity,
    Verdict,
    VerificationReport,
    builtin_catalog,
    corrected_candidates_validation,
    sweep,
    verify_one,
)
from .report import decimal_string, emit_report
from .sums import (
    COSECANT,
    FROM_K0,
    FROM_K1,
    HALF_RANGE,
    SECANT,
    SINE_POWER,
    PoleError,
    SumSpec,
    eval_cot_product_sum,
    eval_power_sum,
    eval_sum_general,
    reduce_spec,
)
from .trig import (
    DEFAULT_PRECISION,
    ApproxReal,
    cos_pi_rational,
    sin_pi_rational,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "gcd",
    "binomial",
    "frac",
    "sawtooth",
    "ApproxReal",
    "sin_pi_rational",
    "cos_pi_rational",
    "DEFAULT_PRECISION",
    "SumSpec",
    "reduce_spec",
    "eval_sum_general",
    "eval_cot_product_sum",
    "eval_power_sum",
    "PoleError",
    "COSECANT",
    "SECANT",
    "SINE_POWER",
    "FROM_K0",
    "FROM_K1",
    "HALF_RANGE",
    "dedekind_def",
    "dedekind_fast",
    "dedekind_sawtooth_form",
    "dedekind_fractional_form",
    "dedekind_closed_q1",
    "dedekind_closed_pq",
    "Identity",
    "Verdict",
    "VerificationReport",
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "EXACT",
    "APPROXIMATE",
    "builtin_catalog",
    "verify_one",
    "sweep",
    "corrected_candidates_validation",
    "emit_report",
    "decimal_string",
    "__version__",
]
