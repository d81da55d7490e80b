"""Catalog of candidate identities and the machinery that adjudicates them.

Every entry pairs an lhs evaluator with an rhs evaluator over an explicit
parameter domain.  Both sides are computed independently (exact rational
arithmetic where possible, rigorous enclosures otherwise) and classified:

* exact entries:        PASS iff the residual is exactly zero;
* approximate entries:  PASS iff residual <= 1e-8 * scale,
                        FAIL iff residual >= 1e-3 * scale,
                        INCONCLUSIVE in between,
  where scale = max(1, |lhs|, |rhs|);
* enclosure entries (the brute-force-vs-closed-form comparisons):
  PASS iff the exact rhs lies inside the lhs enclosure, else FAIL.

Entries that are misprint candidates carry a ``corrected_rhs``; the
as-printed form is never edited, and the corrected form gets its own
verdict.  Two entries are summation-range probes for the secant closed
form: they exist to decide which range the closed form counts, and exactly
one of them is expected to match.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .dedekind import (
    dedekind_closed_pq,
    dedekind_closed_q1,
    dedekind_def,
    dedekind_fractional_form,
    dedekind_sawtooth_form,
)
from .exact import binomial
from .sums import (
    FROM_K0,
    FROM_K1,
    SECANT,
    SINE_POWER,
    SumSpec,
    eval_cot_product_sum,
    eval_power_sum,
    eval_sum_general,
)
from .trig import DEFAULT_PRECISION, ApproxReal, _check_precision, cos_pi_rational

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"

PASS_REL = Fraction(1, 10**8)
FAIL_REL = Fraction(1, 10**3)

EXACT = "exact"
APPROXIMATE = "approximate"

ROLE_PRINTED = "printed"
ROLE_RANGE_PROBE = "range_probe"

RULE_RELATIVE = "relative"
RULE_ENCLOSURE = "enclosure"


@dataclass(frozen=True)
class Identity:
    """One candidate identity: evaluators, domain, and sweep enumeration."""

    id: str
    statement: str
    exactness: str
    param_names: tuple
    lhs: Callable
    rhs: Callable
    domain: Callable
    points: Callable
    corrected_rhs: Optional[Callable] = None
    role: str = ROLE_PRINTED
    status_rule: str = RULE_RELATIVE


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one identity at one parameter point."""

    identity: str
    params: tuple  # ((name, value), ...) in declared order
    lhs: object  # Fraction | ApproxReal
    rhs: object
    residual: Fraction
    scale: Fraction
    status: str
    exactness: str
    enclosed: Optional[bool] = None
    corrected_status: Optional[str] = None
    corrected_residual: Optional[Fraction] = None

    @property
    def params_dict(self) -> dict:
        return dict(self.params)


def _id_sort_key(identity_id: str):
    m = re.match(r"^(\D*)(\d*)(.*)$", identity_id)
    prefix, num, rest = m.groups()
    return (prefix, int(num) if num else -1, rest)


@dataclass
class VerificationReport:
    """Deterministically ordered collection of verdicts plus aggregates."""

    verdicts: list
    precision: int
    scope: str = ""

    def __post_init__(self):
        self.verdicts = sorted(
            self.verdicts,
            key=lambda v: (_id_sort_key(v.identity), tuple(val for _, val in v.params)),
        )

    def summary(self) -> dict:
        out: dict = {}
        for v in self.verdicts:
            row = out.setdefault(v.identity, {PASS: 0, FAIL: 0, INCONCLUSIVE: 0})
            row[v.status] += 1
        return out

    def errata(self) -> list:
        """Printed-form identities that fail somewhere on their swept domain.

        Range probes are excluded: a probe that mismatches is the expected
        outcome of adjudicating the ambiguous summation range, not an
        erratum in its own right.
        """
        roles = {ident.id: ident.role for ident in builtin_catalog()}
        bad = {
            v.identity
            for v in self.verdicts
            if v.status == FAIL and roles.get(v.identity, ROLE_PRINTED) == ROLE_PRINTED
        }
        return sorted(bad, key=_id_sort_key)

    def adjudications(self) -> dict:
        """Data-driven findings, currently the secant summation range."""
        k0 = [v for v in self.verdicts if v.identity == "SECANT_K0"]
        k1 = [v for v in self.verdicts if v.identity == "SECANT_K1"]
        out = {}
        if k0 and k1:
            k0_ok = all(v.status == PASS for v in k0)
            k1_ok = all(v.status == PASS for v in k1)
            k0_bad = all(v.status == FAIL for v in k0)
            k1_bad = all(v.status == FAIL for v in k1)
            if k0_ok and k1_bad:
                out["secant_power_sum_range"] = FROM_K0
            elif k1_ok and k0_bad:
                out["secant_power_sum_range"] = FROM_K1
            else:
                out["secant_power_sum_range"] = "ambiguous"
        return out


def _split(x):
    """(value as Fraction, bound as Fraction or None-for-infinite)."""
    if isinstance(x, ApproxReal):
        if math.isinf(x.bound):
            return x.as_fraction(), None
        return x.as_fraction(), Fraction(x.bound)
    return Fraction(x), Fraction(0)


def _judge(exactness: str, status_rule: str, lhs, rhs):
    """Classify one (lhs, rhs) pair: (status, residual, scale, enclosed)."""
    if exactness == EXACT:
        lv, rv = Fraction(lhs), Fraction(rhs)
        residual = abs(lv - rv)
        scale = max(Fraction(1), abs(lv), abs(rv))
        return (PASS if residual == 0 else FAIL), residual, scale, None
    lv, lb = _split(lhs)
    rv, rb = _split(rhs)
    residual = abs(lv - rv)
    scale = max(Fraction(1), abs(lv), abs(rv))
    if lb is None or rb is None:
        return INCONCLUSIVE, residual, scale, None
    enclosed = residual <= lb + rb
    if status_rule == RULE_ENCLOSURE:
        return (PASS if enclosed else FAIL), residual, scale, enclosed
    if residual <= PASS_REL * scale:
        status = PASS
    elif residual >= FAIL_REL * scale:
        status = FAIL
    else:
        status = INCONCLUSIVE
    return status, residual, scale, enclosed


def verify_one(identity, params: dict, precision: int = DEFAULT_PRECISION) -> Verdict:
    """Evaluate both sides of one identity at one parameter point."""
    ident = _resolve(identity)
    _check_precision(precision)
    if set(params) != set(ident.param_names):
        raise ValueError(
            f"{ident.id} takes parameters {ident.param_names}, got {tuple(sorted(params))}"
        )
    for name in ident.param_names:
        value = params[name]
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"parameter {name} must be an int, got {type(value).__name__}")
    if not ident.domain(params):
        raise ValueError(f"parameters {params} are outside the domain of {ident.id}")
    lhs = ident.lhs(params, precision)
    rhs = ident.rhs(params, precision)
    status, residual, scale, enclosed = _judge(ident.exactness, ident.status_rule, lhs, rhs)
    corrected_status = corrected_residual = None
    if ident.corrected_rhs is not None:
        crhs = ident.corrected_rhs(params, precision)
        corrected_status, corrected_residual, _, _ = _judge(
            ident.exactness, ident.status_rule, lhs, crhs
        )
    return Verdict(
        identity=ident.id,
        params=tuple((name, params[name]) for name in ident.param_names),
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        scale=scale,
        status=status,
        exactness=ident.exactness,
        enclosed=enclosed,
        corrected_status=corrected_status,
        corrected_residual=corrected_residual,
    )


def sweep(ids=None, p_max: int = 30, precision: int = DEFAULT_PRECISION) -> VerificationReport:
    """Verify catalog identities over every enumerated point with p <= p_max."""
    if not isinstance(p_max, int) or isinstance(p_max, bool) or p_max < 2:
        raise ValueError(f"p_max must be an int >= 2, got {p_max}")
    _check_precision(precision)
    catalog = builtin_catalog()
    index = {ident.id: ident for ident in catalog}
    if ids is None:
        selected = list(catalog)
    else:
        unknown = [i for i in ids if i not in index]
        if unknown:
            raise ValueError(f"unknown identity ids: {unknown}; known: {sorted(index)}")
        chosen = set(ids)
        selected = [ident for ident in catalog if ident.id in chosen]
    verdicts = []
    for ident in selected:
        for params in ident.points(p_max):
            verdicts.append(verify_one(ident, params, precision))
    return VerificationReport(
        verdicts=verdicts,
        precision=precision,
        scope=f"sweep ids={'all' if ids is None else ','.join(ids)} p_max={p_max}",
    )


# caps for the corrected-candidate release gate: exact Dedekind-level
# entries sweep to p_max, trigonometric-level ones to 40
_CORRECTED_CAPS = {
    "EQ4": lambda p_max: p_max,
    "EQ16": lambda p_max: p_max,
    "EQ7": lambda p_max: min(p_max, 40),
    "EQ8": lambda p_max: min(p_max, 40),
    "EQ15": lambda p_max: min(p_max, 40),
    "EQ9": lambda p_max: min(p_max, 40),
}


def corrected_candidates_validation(
    p_max: int = 100, precision: int = DEFAULT_PRECISION
) -> VerificationReport:
    """Release gate: every corrected candidate must PASS on its swept domain.

    Verdicts are labeled '<id>.corrected' and their status refers to the
    corrected right-hand side.
    """
    if not isinstance(p_max, int) or isinstance(p_max, bool) or p_max < 10:
        raise ValueError(f"p_max must be an int >= 10, got {p_max}")
    _check_precision(precision)
    verdicts = []
    for ident in builtin_catalog():
        if ident.corrected_rhs is None:
            continue
        cap = _CORRECTED_CAPS[ident.id](p_max)
        for params in ident.points(cap):
            lhs = ident.lhs(params, precision)
            crhs = ident.corrected_rhs(params, precision)
            status, residual, scale, enclosed = _judge(
                ident.exactness, ident.status_rule, lhs, crhs
            )
            verdicts.append(
                Verdict(
                    identity=f"{ident.id}.corrected",
                    params=tuple((name, params[name]) for name in ident.param_names),
                    lhs=lhs,
                    rhs=crhs,
                    residual=residual,
                    scale=scale,
                    status=status,
                    exactness=ident.exactness,
                    enclosed=enclosed,
                )
            )
    return VerificationReport(
        verdicts=verdicts, precision=precision, scope=f"corrected-candidate gate p_max={p_max}"
    )


def _resolve(identity) -> Identity:
    if isinstance(identity, Identity):
        return identity
    if isinstance(identity, str):
        for ident in builtin_catalog():
            if ident.id == identity:
                return ident
        raise ValueError(
            f"unknown identity id {identity!r}; known: {[i.id for i in builtin_catalog()]}"
        )
    raise TypeError(f"identity must be an Identity or id string, got {type(identity).__name__}")


# ---------------------------------------------------------------------------
# catalog construction


def _pair_sum(P, Q, precision) -> ApproxReal:
    """S[1,1,1](P, Q, Q+1) + S[1,1,1](P, Q, Q-1)."""
    a = eval_sum_general(SumSpec(1, 1, 1, P, Q, Q + 1), precision)
    b = eval_sum_general(SumSpec(1, 1, 1, P, Q, Q - 1), precision)
    return a + b


def _coprime_lt_pairs(p_max, p_min=2):
    for p in range(p_min, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield {"p": p, "q": q}


def _with_unit_pair(p_max):
    yield {"p": 1, "q": 1}
    yield from _coprime_lt_pairs(p_max)


def _ordered_coprime_pairs(p_max):
    for p in range(1, p_max + 1):
        for q in range(1, p_max + 1):
            if math.gcd(p, q) == 1:
                yield {"p": p, "q": q}


def _q1_family_points(p_max):
    for p in range(1, p_max + 1):
        seen = set()
        for n in range(0, 4):
            q = n * p + 1
            if q not in seen:
                seen.add(q)
                yield {"p": p, "q": q}


def _secant_rhs_value(p, m) -> Fraction:
    total = 0
    for k in range(1, 2 * m):
        inner = sum(binomial(2 * m, j + 1) for j in range(k, 2 * m))
        total += (-1) ** (m + k) * binomial(m - 1 + k * p, 2 * m - 1) * inner
    return Fraction(p * total)


def _sine_power_rhs_value(p, m) -> Fraction:
    base = binomial(2 * m - 1, m - 1)
    for j in range(1, m // p + 1):
        base += (-1) ** (p * j) * binomial(2 * m, m - p * j)
    return Fraction(p * base, 2 ** (2 * m - 1))


def _parity_points(p_max):
    shapes = ((1, 1, 1), (1, 1, 0), (2, 1, 1), (1, 2, 0), (3, 1, 2), (1, 0, 1), (2, 1, 2))
    count = 0
    for p in range(3, min(p_max, 40) + 1):
        for n, m, l in shapes:
            for q in range(1, min(p, 8)):
                if m > 0 and math.gcd(p, q) != 1:
                    continue
                hit = None
                for r in range(0, 4):
                    if (r * n + (q + 1) * m) % 2 == 1:
                        hit = r
                        break
                if hit is None:
                    continue
                yield {"n": n, "m": m, "l": l, "p": p, "q": q, "r": hit}
                count += 1
                if count >= 120:
                    return
                break  # one q per (p, shape)


def build_catalog() -> tuple:
    """Assemble the full identity catalog (fresh tuple, deterministic order)."""

    entries = []

    def add(**kw):
        entries.append(Identity(**kw))

    # -- Dedekind definition cross-check -----------------------------------
    add(
        id="EQ3",
        statement="two definition-level forms of s(q,p) agree: "
        "sawtooth products vs integer fractional-part accumulation",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_sawtooth_form(pr["q"], pr["p"]),
        rhs=lambda pr, prec: dedekind_fractional_form(pr["q"], pr["p"]),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["q"], pr["p"]) == 1,
        points=_with_unit_pair,
    )

    # -- complement / reciprocity family -----------------------------------
    def eq4_printed(pr, prec):
        p, q = pr["p"], pr["q"]
        return (
            dedekind_def(q, p)
            + Fraction(1, 4)
            + Fraction(
                -6 * p**3 + 6 * p * p * q + 2 * p * p + q * q - 2 * p * q + 1,
                12 * p * (p - q),
            )
        )

    def eq4_corrected(pr, prec):
        p, q = pr["p"], pr["q"]
        return (
            dedekind_def(q, p)
            - Fraction(1, 4)
            + Fraction(1, 12)
            * (Fraction(p, p - q) + Fraction(p - q, p) + Fraction(1, p * (p - q)))
        )

    add(
        id="EQ4",
        statement="complement-reciprocity closed form for s(p, p-q) in terms of s(q,p)",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["p"], pr["p"] - pr["q"]),
        rhs=eq4_printed,
        corrected_rhs=eq4_corrected,
        domain=lambda pr: pr["p"] >= 2
        and 1 <= pr["q"] < pr["p"]
        and math.gcd(pr["p"], pr["q"]) == 1,
        points=_coprime_lt_pairs,
    )

    add(
        id="EQ5",
        statement="s(q,p) equals (1/4p) * sum_k cot(pi k q/p) cot(pi k/p)",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["q"], pr["p"]),
        rhs=lambda pr, prec: eval_cot_product_sum(pr["p"], pr["q"], prec)
        * Fraction(1, 4 * pr["p"]),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["q"], pr["p"]) == 1,
        points=_with_unit_pair,
    )

    # -- the weighted pair-sum reciprocity family ----------------------------
    add(
        id="EQ6",
        statement="q[S(p,q,q+1)+S(p,q,q-1)] + p[S(q,p,p+1)+S(q,p,p-1)] "
        "= -2pq + (2/3)(p^2+q^2+1)",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: _pair_sum(pr["p"], pr["q"], prec) * pr["q"]
        + _pair_sum(pr["q"], pr["p"], prec) * pr["p"],
        rhs=lambda pr, prec: Fraction(-2 * pr["p"] * pr["q"])
        + Fraction(2, 3) * (pr["p"] ** 2 + pr["q"] ** 2 + 1),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["p"], pr["q"]) == 1,
        points=_ordered_coprime_pairs,
    )

    def eq7_lhs(pr, prec):
        p, q = pr["p"], pr["q"]
        return _pair_sum(q, p, prec) * p - _pair_sum(p, p - q, prec) * q

    add(
        id="EQ7",
        statement="p[S(q,p,p+1)+S(q,p,p-1)] - q[S(p,p-q,p-q+1)+S(p,p-q,p-q-1)] "
        "against the printed polynomial 2pq - 4p^2 q + (2/3)(p^2+q^2+1)",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=eq7_lhs,
        rhs=lambda pr, prec: Fraction(2 * pr["p"] * pr["q"] - 4 * pr["p"] ** 2 * pr["q"])
        + Fraction(2, 3) * (pr["p"] ** 2 + pr["q"] ** 2 + 1),
        corrected_rhs=lambda pr, prec: Fraction(-2 * pr["p"] * pr["q"])
        + Fraction(2, 3) * (pr["p"] ** 2 + pr["q"] ** 2 + 1),
        domain=lambda pr: pr["p"] >= 2
        and 1 <= pr["q"] < pr["p"]
        and math.gcd(pr["p"], pr["q"]) == 1,
        points=_coprime_lt_pairs,
    )

    add(
        id="EQ8",
        statement="S(p,q,q+1)+S(p,q,q-1)+S(p,p-q,p-q+1)+S(p,p-q,p-q-1) "
        "against the printed 4pq(p-1)",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: _pair_sum(pr["p"], pr["q"], prec)
        + _pair_sum(pr["p"], pr["p"] - pr["q"], prec),
        rhs=lambda pr, prec: Fraction(4 * pr["p"] * pr["q"] * (pr["p"] - 1)),
        corrected_rhs=lambda pr, prec: Fraction(0),
        domain=lambda pr: pr["p"] >= 2
        and 1 <= pr["q"] < pr["p"]
        and math.gcd(pr["p"], pr["q"]) == 1,
        points=_coprime_lt_pairs,
    )

    def eq9_points(p_max):
        for p in range(2, p_max + 1):
            for n in (1, 2, 3):
                yield {"p": p, "q": n * p + 1}

    add(
        id="EQ9",
        statement="S(q,p,p+1)+S(q,p,p-1) for q = 1 (mod p) against the printed "
        "(2/3)(q + p^2/q + 1/q - p^2 - 2)",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: _pair_sum(pr["q"], pr["p"], prec),
        rhs=lambda pr, prec: Fraction(2, 3)
        * (
            Fraction(pr["q"])
            + Fraction(pr["p"] ** 2, pr["q"])
            + Fraction(1, pr["q"])
            - pr["p"] ** 2
            - 2
        ),
        corrected_rhs=lambda pr, prec: Fraction(
            2 * (pr["q"] - 1) * (pr["q"] - 1 - pr["p"] ** 2), 3 * pr["p"]
        ),
        domain=lambda pr: pr["p"] >= 2 and pr["q"] > 1 and pr["q"] % pr["p"] == 1 % pr["p"],
        points=eq9_points,
    )

    add(
        id="EQ10",
        statement="sum_{k=1}^{p-1} csc^2(pi k/p) = (p^2-1)/3",
        exactness=APPROXIMATE,
        param_names=("p",),
        lhs=lambda pr, prec: eval_power_sum(pr["p"], 1, "cosecant", FROM_K1, prec),
        rhs=lambda pr, prec: Fraction(pr["p"] ** 2 - 1, 3),
        domain=lambda pr: pr["p"] >= 2,
        points=lambda p_max: ({"p": p} for p in range(2, p_max + 1)),
    )

    # -- pointwise cotangent product expansion ------------------------------
    def eq11_side(pr, prec, lhs_side):
        from .trig import sin_pi_rational

        q, a, b = pr["q"], pr["a"], pr["b"]
        if lhs_side:
            num1 = cos_pi_rational(q * a, b, prec)
            den1 = sin_pi_rational(q * a, b, prec)
            num2 = cos_pi_rational(a, b, prec)
            den2 = sin_pi_rational(a, b, prec)
            return (num1 / den1) * (num2 / den2)
        top = cos_pi_rational((q + 1) * a, b, prec) + cos_pi_rational((q - 1) * a, b, prec)
        bottom = (sin_pi_rational(q * a, b, prec) * sin_pi_rational(a, b, prec)) * 2
        return top / bottom

    add(
        id="EQ11",
        statement="cot(q t) cot(t) = [cos((q+1)t) + cos((q-1)t)] / (2 sin(q t) sin(t)) "
        "at t = pi a/b",
        exactness=APPROXIMATE,
        param_names=("q", "a", "b"),
        lhs=lambda pr, prec: eq11_side(pr, prec, True),
        rhs=lambda pr, prec: eq11_side(pr, prec, False),
        domain=lambda pr: pr["b"] >= 1
        and pr["a"] % pr["b"] != 0
        and (pr["q"] * pr["a"]) % pr["b"] != 0,
        points=lambda p_max: (
            {"q": q, "a": a, "b": b}
            for q in range(1, 6)
            for b in range(2, 9)
            for a in range(1, b)
            if math.gcd(a, b) == 1 and (q * a) % b != 0
        ),
    )

    add(
        id="EQ12",
        statement="sum_k cot(pi k q/p) cot(pi k/p) = (1/2)[S(p,q,q+1)+S(p,q,q-1)]",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: eval_cot_product_sum(pr["p"], pr["q"], prec),
        rhs=lambda pr, prec: _pair_sum(pr["p"], pr["q"], prec) * Fraction(1, 2),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["p"], pr["q"]) == 1,
        points=_with_unit_pair,
    )

    add(
        id="EQ12B",
        statement="s(q,p) = (1/8p)[S(p,q,q+1)+S(p,q,q-1)]",
        exactness=APPROXIMATE,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["q"], pr["p"]),
        rhs=lambda pr, prec: _pair_sum(pr["p"], pr["q"], prec) * Fraction(1, 8 * pr["p"]),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["p"], pr["q"]) == 1,
        points=_with_unit_pair,
    )

    # -- the q = 1 (mod p) closed forms -------------------------------------
    add(
        id="EQ13",
        statement="s(q,p) = (p-1)(p-2)/(12p) when q = 1 (mod p)",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["q"], pr["p"]),
        rhs=lambda pr, prec: dedekind_closed_q1(pr["p"], pr["q"]),
        domain=lambda pr: pr["p"] >= 1
        and pr["q"] >= 1
        and pr["q"] % pr["p"] == 1 % pr["p"],
        points=_q1_family_points,
    )

    add(
        id="EQ14",
        statement="s(p,q) = (1/12)((q-2)/p + p/q + 1/(pq) - p) when q = 1 (mod p)",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["p"], pr["q"]),
        rhs=lambda pr, prec: dedekind_closed_pq(pr["p"], pr["q"]),
        domain=lambda pr: pr["p"] >= 1
        and pr["q"] >= 1
        and pr["q"] % pr["p"] == 1 % pr["p"],
        points=_q1_family_points,
    )

    # -- the odd-p evaluation with a misprinted constant ---------------------
    def eq15_lhs(pr, prec):
        p = pr["p"]
        s3 = eval_sum_general(SumSpec(3, 1, 1, p, 2, 1), prec)
        s1 = eval_sum_general(SumSpec(1, 1, 1, p, 2, 1), prec)
        return s3 * 2 - s1

    add(
        id="EQ15",
        statement="2 S[3,1,1](p,2,1) - S[1,1,1](p,2,1) for odd p against the printed "
        "p^2/6 - p + 5/2",
        exactness=APPROXIMATE,
        param_names=("p",),
        lhs=eq15_lhs,
        rhs=lambda pr, prec: Fraction(pr["p"] ** 2, 6) - pr["p"] + Fraction(5, 2),
        corrected_rhs=lambda pr, prec: Fraction(pr["p"] ** 2, 6) - pr["p"] + Fraction(5, 6),
        domain=lambda pr: pr["p"] >= 3 and pr["p"] % 2 == 1,
        points=lambda p_max: ({"p": p} for p in range(3, p_max + 1, 2)),
    )

    add(
        id="EQ16",
        statement="complement claim s(p-q, p) = (p-1)/2 - s(q,p) as printed",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["p"] - pr["q"], pr["p"]),
        rhs=lambda pr, prec: Fraction(pr["p"] - 1, 2) - dedekind_def(pr["q"], pr["p"]),
        corrected_rhs=lambda pr, prec: -dedekind_def(pr["q"], pr["p"]),
        domain=lambda pr: pr["p"] >= 2
        and 1 <= pr["q"] < pr["p"]
        and math.gcd(pr["p"], pr["q"]) == 1,
        points=_coprime_lt_pairs,
    )

    add(
        id="EQ17",
        statement="reciprocity: s(q,p) + s(p,q) = -1/4 + (1/12)(q/p + p/q + 1/(pq))",
        exactness=EXACT,
        param_names=("p", "q"),
        lhs=lambda pr, prec: dedekind_def(pr["q"], pr["p"]) + dedekind_def(pr["p"], pr["q"]),
        rhs=lambda pr, prec: Fraction(-1, 4)
        + Fraction(1, 12)
        * (
            Fraction(pr["q"], pr["p"])
            + Fraction(pr["p"], pr["q"])
            + Fraction(1, pr["p"] * pr["q"])
        ),
        domain=lambda pr: pr["p"] >= 1 and pr["q"] >= 1 and math.gcd(pr["p"], pr["q"]) == 1,
        points=lambda p_max: (
            {"p": p, "q": q}
            for p in range(1, p_max + 1)
            for q in range(1, p + 1)
            if math.gcd(p, q) == 1
        ),
    )

    # -- structural vanishing ------------------------------------------------
    add(
        id="PARITY",
        statement="S[n,m,l](p,q,r) = 0 whenever r*n + (q+1)*m is odd",
        exactness=APPROXIMATE,
        param_names=("n", "m", "l", "p", "q", "r"),
        lhs=lambda pr, prec: eval_sum_general(
            SumSpec(pr["n"], pr["m"], pr["l"], pr["p"], pr["q"], pr["r"]), prec
        ),
        rhs=lambda pr, prec: Fraction(0),
        domain=lambda pr: pr["p"] >= 1
        and pr["n"] >= 0
        and pr["m"] >= 0
        and pr["l"] >= 0
        and (pr["r"] * pr["n"] + (pr["q"] + 1) * pr["m"]) % 2 == 1
        and (pr["m"] == 0 or math.gcd(pr["p"], pr["q"]) == 1),
        points=_parity_points,
    )

    # -- closed-form power sums ----------------------------------------------
    def secant_probe(range_name):
        def lhs(pr, prec):
            return eval_power_sum(pr["p"], pr["m"], SECANT, range_name, prec)

        return lhs

    secant_points = lambda p_max: (
        {"p": p, "m": m}
        for p in range(3, min(p_max, 15) + 1, 2)
        for m in range(1, 5)
    )
    for range_name in (FROM_K0, FROM_K1):
        add(
            id=f"SECANT_K{range_name[-1]}",
            statement=f"sec^(2m) power sum over k starting at {range_name[-1]} (odd p) "
            "against the binomial closed form",
            exactness=APPROXIMATE,
            status_rule=RULE_ENCLOSURE,
            role=ROLE_RANGE_PROBE,
            param_names=("p", "m"),
            lhs=secant_probe(range_name),
            rhs=lambda pr, prec: _secant_rhs_value(pr["p"], pr["m"]),
            domain=lambda pr: pr["p"] >= 3 and pr["p"] % 2 == 1 and pr["m"] >= 1,
            points=secant_points,
        )

    add(
        id="SINEPOW",
        statement="sum_{k=0}^{p-1} sin^(2m)(pi k/p) = 2^(1-2m) p [C(2m-1,m-1) "
        "+ corrections for m >= p]",
        exactness=APPROXIMATE,
        status_rule=RULE_ENCLOSURE,
        param_names=("p", "m"),
        lhs=lambda pr, prec: eval_power_sum(pr["p"], pr["m"], SINE_POWER, FROM_K0, prec),
        rhs=lambda pr, prec: _sine_power_rhs_value(pr["p"], pr["m"]),
        domain=lambda pr: pr["p"] >= 2 and pr["m"] >= 1,
        points=lambda p_max: (
            {"p": p, "m": m}
            for p in range(2, min(p_max, 20) + 1)
            for m in range(1, min(25, p + 6) + 1)
        ),
    )

    def coshalf_lhs(pr, prec):
        p = pr["p"]
        a = cos_pi_rational(p + 1, 2, prec)
        b = cos_pi_rational(p - 1, 2, prec)
        if not (a.is_exact() and b.is_exact()):
            raise ArithmeticError("half-integer cosine values should be exact")
        return a.as_fraction() + b.as_fraction()

    add(
        id="COSHALF",
        statement="cos(pi (p+1)/2) + cos(pi (p-1)/2) = 0 for odd p",
        exactness=EXACT,
        param_names=("p",),
        lhs=coshalf_lhs,
        rhs=lambda pr, prec: Fraction(0),
        domain=lambda pr: pr["p"] >= 1 and pr["p"] % 2 == 1,
        points=lambda p_max: ({"p": p} for p in range(1, p_max + 1, 2)),
    )

    return tuple(entries)


_CATALOG: Optional[tuple] = None


def builtin_catalog() -> tuple:
    """The full identity catalog (built once, immutable)."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = build_catalog()
    return _CATALOG
