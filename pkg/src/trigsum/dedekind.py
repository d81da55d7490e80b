"""Dedekind sums s(q, p) as exact rationals.

s(q, p) = sum_{k=1}^{p-1} ((k q / p)) ((k / p)), with ((x)) the sawtooth.

Two independent definition-level forms are computed with pure integer
arithmetic and cross-checked against each other; a reciprocity-descent
evaluator provides the same value in O(log p) rational operations; two
closed forms cover the q = 1 (mod p) family.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def _validate(q: int, p: int) -> None:
    for name, value in (("q", q), ("p", p)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if math.gcd(q, p) != 1:
        raise ValueError(f"s(q, p) requires gcd(q, p) = 1, got q={q}, p={p}")


def dedekind_sawtooth_form(q: int, p: int) -> Fraction:
    """Direct sawtooth-product form, accumulated over a common denominator.

    With k' = k q mod p (never 0 when gcd(q, p) = 1), each term is
    ((k'/p))((k/p)) = (2k' - p)(2k - p) / (4 p^2).
    """
    _validate(q, p)
    if p == 1:
        return Fraction(0)
    q %= p
    total = 0
    kp = 0
    for k in range(1, p):
        kp = (kp + q) % p
        total += (2 * kp - p) * (2 * k - p)
    return Fraction(total, 4 * p * p)


def dedekind_fractional_form(q: int, p: int) -> Fraction:
    """Fractional-part form: s(q, p) = (1/p^2) sum k (kq mod p)  -  (p-1)/4.

    Follows from ((a))((b)) = {a}{b} - ({a}+{b})/2 + 1/4 for non-integer a, b
    and sum_{k=1}^{p-1} {k/p} = (p-1)/2.
    """
    _validate(q, p)
    if p == 1:
        return Fraction(0)
    q %= p
    total = 0
    kp = 0
    for k in range(1, p):
        kp = (kp + q) % p
        total += k * kp
    return Fraction(total, p * p) - Fraction(p - 1, 4)


@lru_cache(maxsize=None)
def _dedekind_def_cached(q: int, p: int) -> Fraction:
    a = dedekind_sawtooth_form(q, p)
    b = dedekind_fractional_form(q, p)
    if a != b:
        raise ArithmeticError(
            f"internal cross-check failed: the two definition forms of s({q}, {p}) disagree"
        )
    return a


def dedekind_def(q: int, p: int) -> Fraction:
    """Definition-level Dedekind sum; both direct forms computed and compared."""
    _validate(q, p)
    return _dedekind_def_cached(q % p, p)


def dedekind_fast(q: int, p: int) -> Fraction:
    """Euclidean-descent evaluation via the reciprocity law, O(log p) steps.

    Uses s(q, p) = -1/4 + (q^2 + p^2 + 1)/(12 p q) - s(p, q) together with
    periodicity s(q + p, p) = s(q, p) and negation s(p - q, p) = -s(q, p).
    """
    _validate(q, p)
    sign = 1
    result = Fraction(0)
    while p > 1:
        q %= p
        if 2 * q > p:
            q = p - q
            sign = -sign
        if q == 0:
            break  # p == 1 forced by gcd; defensive
        result += sign * (Fraction(-1, 4) + Fraction(q * q + p * p + 1, 12 * p * q))
        sign = -sign
        p, q = q, p
    return result


def dedekind_closed_q1(p: int, q: int) -> Fraction:
    """Closed form s(q, p) = (p-1)(p-2) / (12 p), valid for q = 1 (mod p)."""
    _validate(q, p)
    if q % p != 1 % p:
        raise ValueError(f"closed form requires q = 1 (mod p), got q={q}, p={p}")
    return Fraction((p - 1) * (p - 2), 12 * p)


def dedekind_closed_pq(p: int, q: int) -> Fraction:
    """Closed form for the swapped sum s(p, q) when q = 1 (mod p), q >= 1.

    s(p, q) = (1/12) ((q-2)/p + p/q + 1/(pq) - p).
    """
    _validate(q, p)
    if q < 1:
        raise ValueError(f"closed form requires q >= 1, got q={q}")
    if q % p != 1 % p:
        raise ValueError(f"closed form requires q = 1 (mod p), got q={q}, p={p}")
    return (
        Fraction(q - 2, 12 * p)
        + Fraction(p, 12 * q)
        + Fraction(1, 12 * p * q)
        - Fraction(p, 12)
    )
