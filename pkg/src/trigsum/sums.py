"""Finite trigonometric sums over k = 1 .. p-1 with rigorous error bounds.

The central object is the sum

    S[n,m,l](p, q, r) = sum_{k=1}^{p-1} cos^n(pi k r / p)
                                        csc^m(pi k q / p)
                                        csc^l(pi k / p)

for integer exponents n, m, l and integers p >= 1, q, r.  Two evaluation
strategies share one error model:

* a direct per-term path (any exponent signs) that prices each term from its
  actual magnitude, and
* an angle-addition recurrence for large p and small non-negative exponents,
  whose error analysis uses the exact floor |sin(pi k q / p)| >= 2/p valid
  whenever gcd(p, q) = 1.

Both return an :class:`~trigsum.trig.ApproxReal` whose bound is rigorous:
the mathematically exact sum lies inside the reported enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

from .trig import (
    DEFAULT_PRECISION,
    _UP,
    ApproxReal,
    _check_precision,
    _cos_w,
    _rel_base,
    _sin_w,
    _ulp,
)

# Direct summation below this p; the rotation recurrence above it.
FAST_PATH_MIN_P = 4096
_FAST_MAX_EXP = 16

COSECANT = "cosecant"
SECANT = "secant"
SINE_POWER = "sine_power"
_POWER_KINDS = (COSECANT, SECANT, SINE_POWER)

FROM_K0 = "from_k0"
FROM_K1 = "from_k1"
HALF_RANGE = "half_range"
_POWER_RANGES = (FROM_K0, FROM_K1, HALF_RANGE)


class PoleError(ValueError):
    """A summand has a vanishing denominator somewhere on the summation range."""


def _check_int(name: str, value) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class SumSpec:
    """Parameters (n, m, l; p, q, r) of one finite trigonometric sum."""

    n: int
    m: int
    l: int
    p: int
    q: int
    r: int

    def __post_init__(self):
        for name in ("n", "m", "l", "p", "q", "r"):
            _check_int(name, getattr(self, name))
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")


def reduce_spec(spec: SumSpec) -> SumSpec:
    """Canonical form: q and r reduced mod 2p (every summand is 2p-periodic)."""
    twop = 2 * spec.p
    return SumSpec(spec.n, spec.m, spec.l, spec.p, spec.q % twop, spec.r % twop)


def _direct_core(p, factors, k_lo, k_hi, wprec):
    """Sum of prod_i f_i(pi * mult_i * k / p)^exp_i over k in [k_lo, k_hi].

    ``factors`` is a list of (func, mult, exp) with func in {"cos", "sin"}
    and exp != 0.  Returns (mpfr accumulator at wprec bits, absolute error
    bound as float).  Raises PoleError if a negative-exponent factor
    vanishes exactly at some k.
    """
    ctx = gmpy2.context(precision=wprec)
    cmul, cdiv, cadd, cpow = ctx.mul, ctx.div, ctx.add, ctx.pow
    acc = gmpy2.mpfr(0, wprec)
    one = gmpy2.mpfr(1, wprec)
    rel_term = _UP * _rel_base(wprec) * (sum(abs(e) for _, _, e in factors) + 8)
    add_eps = max(math.ldexp(1.0, -wprec), 1e-300)
    sabs = 0.0
    err = 0.0
    nterms = 0
    twop = 2 * p
    for k in range(k_lo, k_hi + 1):
        num = None
        den = None
        zero_term = False
        for func, mult, exp in factors:
            a = (mult * k) % twop
            v, _ = _cos_w(a, p, wprec) if func == "cos" else _sin_w(a, p, wprec)
            if v == 0:
                if exp < 0:
                    raise PoleError(
                        f"{func}(pi*{mult}*k/p) vanishes at k={k} (p={p}) "
                        f"and appears with negative exponent {exp}"
                    )
                zero_term = True
                break
            w = cpow(v, abs(exp)) if exp not in (1, -1) else v
            if exp > 0:
                num = w if num is None else cmul(num, w)
            else:
                den = w if den is None else cmul(den, w)
        if zero_term:
            continue
        if den is None:
            t = num if num is not None else one
        else:
            t = cdiv(one if num is None else num, den)
        acc = cadd(acc, t)
        tm = abs(float(t))
        sabs += tm
        err += tm * rel_term
        nterms += 1
    err += nterms * sabs * add_eps * _UP
    return acc, err


def _rotation_core(n, m, l, p, q, r, wprec):
    """Angle-addition evaluation for p > FAST_PATH_MIN_P, 0 <= n,m,l small.

    Requires gcd(p, q) = 1 when m > 0.  Exploits the k <-> p-k symmetry when
    the summand is symmetric (r*n + (q+1)*m even) to halve the range.
    Returns (mpfr accumulator at wprec bits, absolute error bound).
    """
    ctx = gmpy2.context(precision=wprec)
    cmul, cdiv, cadd, csub, cpow = ctx.mul, ctx.div, ctx.add, ctx.sub, ctx.pow
    one = gmpy2.mpfr(1, wprec)

    parity_even = (r * n + (q + 1) * m) % 2 == 0
    if parity_even:
        half = (p - 1) // 2 if p % 2 else p // 2 - 1
    else:
        half = p - 1

    # per-sequence state: value cos/sin at angle pi*x*k/p, plus the exact
    # one-step rotation cos/sin(pi*x/p)
    def init(x):
        c1, _ = _cos_w(x, p, wprec)
        s1, _ = _sin_w(x, p, wprec)
        return c1, s1, c1, s1

    cr = sr = crs = srs = None
    cq = sq = cqs = sqs = None
    c1 = s1 = c1s = s1s = None
    if n:
        cr, sr, crs, srs = init(r)
    if m:
        cq, sq, cqs, sqs = init(q)
    if l:
        c1, s1, c1s, s1s = init(1)

    acc = gmpy2.mpfr(0, wprec)
    for _ in range(half):
        num = None
        den = None
        if n:
            num = cpow(cr, n) if n > 1 else cr
        if m:
            den = cpow(sq, m) if m > 1 else sq
        if l:
            w = cpow(s1, l) if l > 1 else s1
            den = w if den is None else cmul(den, w)
        if den is None:
            t = num if num is not None else one
        else:
            t = cdiv(one if num is None else num, den)
        acc = cadd(acc, t)
        if n:
            cr, sr = csub(cmul(cr, crs), cmul(sr, srs)), cadd(cmul(sr, crs), cmul(cr, srs))
        if m:
            cq, sq = csub(cmul(cq, cqs), cmul(sq, sqs)), cadd(cmul(sq, cqs), cmul(cq, sqs))
        if l:
            c1, s1 = csub(cmul(c1, c1s), cmul(s1, s1s)), cadd(cmul(s1, c1s), cmul(c1, s1s))

    # error accounting, outward at every step
    E = max((half + 2) * math.ldexp(1.0, 6 - wprec), 1e-300)
    log_tcap = (m + l) * (math.log2(p) - 1.0 + 0.03)
    coeff = n * E * 1.05 + (m + l) * E * (p / 2.0) * 1.05 + math.ldexp(1.0, 4 - wprec)
    try:
        tcap = 2.0 ** log_tcap
        per_term = tcap * coeff
        total = half * per_term * _UP
        total += half * (half * tcap) * max(math.ldexp(1.0, -wprec), 1e-300) * _UP
    except OverflowError:
        total = math.inf

    if not parity_even:
        return acc, total

    total *= 2.0
    acc = cmul(acc, gmpy2.mpfr(2, wprec))
    if p % 2 == 0:
        # middle term k = p/2: all angles are multiples of pi/2, so the
        # term is an exact integer in {-1, 0, 1}
        cmid = (1, 0, -1, 0)[r % 4]
        cpart = cmid**n if n else 1
        sqmid = 1 if q % 4 == 1 else -1  # q odd since gcd(p, q) = 1, p even
        middle = cpart * (sqmid**m if m else 1)
        if middle:
            acc = cadd(acc, gmpy2.mpfr(middle, wprec))
            total += _ulp(acc, wprec)
    return acc, total


def eval_sum_general(spec: SumSpec, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """Evaluate S[n,m,l](p, q, r) with a rigorous enclosure.

    Raises PoleError when a cosecant factor (m > 0 and gcd(p, q) > 1) or an
    inverse cosine factor (n < 0 with cos vanishing on the range) makes the
    sum undefined.  The empty sum p = 1 is exactly 0.
    """
    if not isinstance(spec, SumSpec):
        raise TypeError(f"spec must be a SumSpec, got {type(spec).__name__}")
    _check_precision(precision)
    spec = reduce_spec(spec)
    n, m, l, p, q, r = spec.n, spec.m, spec.l, spec.p, spec.q, spec.r
    if p == 1:
        return ApproxReal(gmpy2.mpfr(0, precision), 0.0)
    if m > 0 and math.gcd(p, q) != 1:
        raise PoleError(
            f"csc(pi k q/p) has a pole on 1 <= k < p: gcd(p={p}, q={q}) != 1 with m={m} > 0"
        )

    fast = (
        p > FAST_PATH_MIN_P
        and 0 <= n <= _FAST_MAX_EXP
        and 0 <= m <= _FAST_MAX_EXP
        and 0 <= l <= _FAST_MAX_EXP
    )
    if fast:
        wprec = precision + 40 + p.bit_length() * (m + l + 3) + 2 * (n + m + l)
        acc, err = _rotation_core(n, m, l, p, q, r, wprec)
    else:
        wprec = precision + 32 + p.bit_length() + 2 * (abs(n) + abs(m) + abs(l))
        factors = []
        if n:
            factors.append(("cos", r, n))
        if m:
            factors.append(("sin", q, -m))
        if l:
            factors.append(("sin", 1, -l))
        acc, err = _direct_core(p, factors, 1, p - 1, wprec)

    out = gmpy2.mpfr(acc, precision)
    bound = err * _UP + _ulp(out, precision)
    return ApproxReal(out, float(bound))


def eval_cot_product_sum(p: int, q: int, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """Enclosure of sum_{k=1}^{p-1} cot(pi k q / p) cot(pi k / p).

    Requires gcd(p, q) = 1 (otherwise some cot(pi k q / p) is undefined).
    """
    _check_int("p", p)
    _check_int("q", q)
    _check_precision(precision)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if p == 1:
        return ApproxReal(gmpy2.mpfr(0, precision), 0.0)
    if math.gcd(p, q) != 1:
        raise PoleError(f"cot(pi k q/p) has a pole on 1 <= k < p: gcd(p={p}, q={q}) != 1")
    q %= 2 * p
    wprec = precision + 32 + p.bit_length() + 8
    factors = [("cos", q, 1), ("sin", q, -1), ("cos", 1, 1), ("sin", 1, -1)]
    acc, err = _direct_core(p, factors, 1, p - 1, wprec)
    out = gmpy2.mpfr(acc, precision)
    return ApproxReal(out, float(err * _UP + _ulp(out, precision)))


def eval_power_sum(
    p: int,
    m: int,
    kind: str,
    sum_range: str = FROM_K1,
    precision: int = DEFAULT_PRECISION,
) -> ApproxReal:
    """Even power sums of one trigonometric factor at angles pi*k/p.

    kind:       "cosecant" -> csc^(2m),  "secant" -> sec^(2m),
                "sine_power" -> sin^(2m)
    sum_range:  "from_k1"   -> k = 1 .. p-1
                "from_k0"   -> k = 0 .. p-1 (pole for cosecant)
                "half_range"-> k = 1 .. (p-1)/2 for odd p, (p-2)/2 for even p

    Secant sums have a pole at k = p/2 for even p (reported as PoleError
    when that k is inside the requested range).
    """
    _check_int("p", p)
    _check_int("m", m)
    _check_precision(precision)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if kind not in _POWER_KINDS:
        raise ValueError(f"kind must be one of {_POWER_KINDS}, got {kind!r}")
    if sum_range not in _POWER_RANGES:
        raise ValueError(f"sum_range must be one of {_POWER_RANGES}, got {sum_range!r}")
    if kind == COSECANT and sum_range == FROM_K0:
        raise PoleError("the k = 0 term of a cosecant power sum is a pole")

    if sum_range == HALF_RANGE:
        k_hi = (p - 1) // 2 if p % 2 else (p - 2) // 2
        if k_hi < 1:
            return ApproxReal(gmpy2.mpfr(0, precision), 0.0)
        func, exp = {
            COSECANT: ("sin", -2 * m),
            SECANT: ("cos", -2 * m),
            SINE_POWER: ("sin", 2 * m),
        }[kind]
        wprec = precision + 32 + p.bit_length() + 4 * m
        acc, err = _direct_core(p, [(func, 1, exp)], 1, k_hi, wprec)
        out = gmpy2.mpfr(acc, precision)
        return ApproxReal(out, float(err * _UP + _ulp(out, precision)))

    spec = {
        COSECANT: SumSpec(0, 0, 2 * m, p, 1, 0),
        SECANT: SumSpec(-2 * m, 0, 0, p, 1, 1),
        SINE_POWER: SumSpec(0, 0, -2 * m, p, 1, 0),
    }[kind]
    total = eval_sum_general(spec, precision)
    if sum_range == FROM_K0 and kind == SECANT:
        total = total + 1  # sec^(2m)(0) = 1; the sine k = 0 term is 0
    return total
