"""Exact integer and rational building blocks.

Everything in this module is pure ``int``/``fractions.Fraction`` arithmetic:
no floating point, no rounding.  The rest of the package treats these
functions as ground truth.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Exact rational type used across the package.
Rational = Fraction


def gcd(a: int, b: int) -> int:
    """Greatest common divisor, non-negative. gcd(0, 0) == 0."""
    return math.gcd(a, b)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 for k < 0 or k > n. Requires n >= 0."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def frac(x: Rational | int) -> Rational:
    """Fractional part {x} = x - floor(x), in [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def sawtooth(x: Rational | int) -> Rational:
    """Sawtooth ((x)): 0 at integers, else x - floor(x) - 1/2.

    Odd and 1-periodic: ((-x)) == -((x)) and ((x + 1)) == ((x)).
    """
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)
