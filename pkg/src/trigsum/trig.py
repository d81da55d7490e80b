"""Validated arbitrary-precision evaluation of sin(pi*a/b) and cos(pi*a/b).

Every approximate quantity is an :class:`ApproxReal`: an MPFR value plus an
absolute error bound, with the guarantee that the true real number lies in
``[value - bound, value + bound]``.  Bounds are rigorous but not tight; they
are propagated outward (never rounded down) through every operation.

Argument reduction is exact integer arithmetic: the fraction a/b is reduced
to lowest terms and folded into [0, 1/2] by symmetry before any floating
point happens.  Inputs whose sine is rational (0, +-1/2, +-1) are returned
exactly with a zero bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import gmpy2

DEFAULT_PRECISION = 128
MIN_PRECISION = 53
MAX_PRECISION = 1 << 16

# Kernel values carry a relative error of at most 2^(3-W) at working
# precision W: one correct rounding each for the quotient a/b, pi, the
# product, and the sine, with the argument in [0, pi/2] where sin has
# condition number <= pi/2.
_REL_SHIFT = 3

# Floors keep error constants representable as nonzero doubles even at
# extreme working precision.  Flooring an error term upward is sound.
_TINY = 5e-324
_REL_FLOOR = 1e-300
_UP = 1.0000001  # outward slack for double-arithmetic error accounting

_CORE_CACHE: dict[tuple[int, int, int], tuple] = {}
_CACHE_MAX_DEN = 1 << 14
_CACHE_MAX_LEN = 1 << 20


def _check_precision(precision: int) -> None:
    if not isinstance(precision, int) or isinstance(precision, bool):
        raise TypeError(f"precision must be an int, got {type(precision).__name__}")
    if not MIN_PRECISION <= precision <= MAX_PRECISION:
        raise ValueError(
            f"precision must be in [{MIN_PRECISION}, {MAX_PRECISION}], got {precision}"
        )


def _ulp(x, precision: int) -> float:
    """Upper bound on one unit in the last place of x at the given precision."""
    if x == 0:
        return _TINY
    return max(math.ldexp(1.0, gmpy2.get_exp(x) - precision), _TINY)


def _rel_base(wprec: int) -> float:
    return max(math.ldexp(1.0, _REL_SHIFT - wprec), _REL_FLOOR)


def _sin_symmetry(a: int, b: int) -> tuple[int, int, int]:
    """Fold a/b in [0, 2) (lowest terms) into sign * (a'/b') with a'/b' in [0, 1/2]."""
    sign = 1
    if a >= b:
        sign, a = -1, a - b
    if 2 * a > b:
        a = b - a
    return sign, a, b


def _sin_pi_core(a: int, b: int, wprec: int):
    """sin(pi*a/b) for 0 <= a/b <= 1/2 in lowest terms.

    Returns (value at wprec bits, relative error bound).  Exact rational
    outcomes get bound 0.0.
    """
    if a == 0:
        return gmpy2.mpfr(0, wprec), 0.0
    if b == 2:  # sin(pi/2) = 1
        return gmpy2.mpfr(1, wprec), 0.0
    if b == 6:  # sin(pi/6) = 1/2
        return gmpy2.mpfr(gmpy2.mpq(1, 2), wprec), 0.0
    key = (a, b, wprec) if b <= _CACHE_MAX_DEN else None
    if key is not None:
        hit = _CORE_CACHE.get(key)
        if hit is not None:
            return hit
    ctx = gmpy2.context(precision=wprec)
    val = ctx.sin(ctx.mul(ctx.const_pi(), gmpy2.mpfr(gmpy2.mpq(a, b), wprec)))
    out = (val, _rel_base(wprec))
    if key is not None and len(_CORE_CACHE) < _CACHE_MAX_LEN:
        _CORE_CACHE[key] = out
    return out


def _reduce_angle(a: int, b: int) -> tuple[int, int]:
    """Reduce a/b to lowest terms with b > 0 and a in [0, 2b)."""
    if b == 0:
        raise ZeroDivisionError("denominator of the angle is zero")
    if b < 0:
        a, b = -a, -b
    g = math.gcd(a, b)
    if g > 1:
        a //= g
        b //= g
    a %= 2 * b
    return a, b


def _sin_w(a: int, b: int, wprec: int):
    """sin(pi*a/b) at working precision: (mpfr value, relative error bound)."""
    a, b = _reduce_angle(a, b)
    sign, a, b = _sin_symmetry(a, b)
    val, rel = _sin_pi_core(a, b, wprec)
    if sign < 0 and val != 0:
        val = gmpy2.context(precision=wprec).minus(val)
    return val, rel


def _cos_w(a: int, b: int, wprec: int):
    """cos(pi*a/b) at working precision, via cos(x) = sin(x + pi/2)."""
    return _sin_w(2 * a + b, 2 * b, wprec)


@dataclass(frozen=True)
class ApproxReal:
    """An MPFR value with a rigorous absolute error bound.

    The true quantity being approximated lies in
    ``[value - bound, value + bound]``.  ``bound == 0.0`` means the value is
    exact (and therefore rational).  Arithmetic propagates bounds outward, so
    any chain of operations on sound enclosures is again a sound enclosure.
    """

    value: object  # gmpy2.mpfr
    bound: float

    def __post_init__(self):
        if self.bound < 0 or math.isnan(self.bound):
            raise ValueError(f"error bound must be >= 0, got {self.bound}")

    @property
    def precision(self) -> int:
        return max(self.value.precision, MIN_PRECISION)

    def as_fraction(self) -> Fraction:
        """The stored value as an exact rational (independent of the bound)."""
        n, d = self.value.as_integer_ratio()
        return Fraction(n, d)

    def contains(self, x) -> bool:
        """Exact test of whether rational x lies inside the enclosure."""
        if math.isinf(self.bound):
            return True
        return abs(self.as_fraction() - Fraction(x)) <= Fraction(self.bound)

    def is_exact(self) -> bool:
        return self.bound == 0.0

    def _mag(self) -> float:
        m = abs(float(self.value))
        if math.isnan(m):
            raise ValueError("enclosure value is NaN")
        return m

    @staticmethod
    def from_rational(x, precision: int = DEFAULT_PRECISION) -> "ApproxReal":
        """Enclose a rational: exact when representable, else 1 ulp wide."""
        _check_precision(precision)
        x = Fraction(x)
        v = gmpy2.mpfr(gmpy2.mpq(x), precision)
        n, d = v.as_integer_ratio()
        if Fraction(n, d) == x:
            return ApproxReal(v, 0.0)
        return ApproxReal(v, _ulp(v, precision) * _UP)

    def _coerce(self, other, precision: int):
        if isinstance(other, ApproxReal):
            return other
        if isinstance(other, (int, Fraction)):
            return ApproxReal.from_rational(other, precision)
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        prec = max(self.precision, other.precision)
        ctx = gmpy2.context(precision=prec)
        v = ctx.add(self.value, other.value)
        b = (self.bound + other.bound) * _UP + _ulp(v, prec)
        return ApproxReal(v, b)

    __radd__ = __add__

    def __neg__(self):
        ctx = gmpy2.context(precision=self.precision)
        return ApproxReal(ctx.minus(self.value), self.bound)

    def __sub__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        prec = max(self.precision, other.precision)
        ctx = gmpy2.context(precision=prec)
        v = ctx.mul(self.value, other.value)
        a_mag, b_mag = self._mag(), other._mag()
        b = (a_mag * other.bound + b_mag * self.bound + self.bound * other.bound) * _UP
        if v != 0:
            b += _ulp(v, prec)
        return ApproxReal(v, b * _UP)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        prec = max(self.precision, other.precision)
        den_mag = other._mag()
        if other.value == 0 or den_mag <= other.bound * (1.0 + 1e-9):
            raise ZeroDivisionError("division by an enclosure that may contain zero")
        ctx = gmpy2.context(precision=prec)
        v = ctx.div(self.value, other.value)
        num_mag = self._mag()
        denom_floor = den_mag * (1.0 - 1e-12) - other.bound
        b = ((self.bound * den_mag + other.bound * num_mag) / (den_mag * denom_floor)) * _UP
        b += _ulp(v, prec)
        return ApproxReal(v, b * _UP)

    def __rtruediv__(self, other):
        other = self._coerce(other, self.precision)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __repr__(self):
        return f"ApproxReal({self.value!r}, bound={self.bound:.3e})"


def sin_pi_rational(a: int, b: int, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """Enclosure of sin(pi * a/b) at the requested precision.

    Rational outcomes (a/b equivalent to 0, 1/6, 1/2, ... mod 2) are exact
    with bound 0; all other outcomes carry a 2-ulp bound at ``precision``.
    """
    _check_precision(precision)
    wprec = precision + 16
    val, rel = _sin_w(a, b, wprec)
    if rel == 0.0:
        return ApproxReal(gmpy2.mpfr(val, precision), 0.0)
    out = gmpy2.mpfr(val, precision)
    return ApproxReal(out, 2.0 * _ulp(out, precision))


def cos_pi_rational(a: int, b: int, precision: int = DEFAULT_PRECISION) -> ApproxReal:
    """Enclosure of cos(pi * a/b), reduced exactly to a sine evaluation."""
    if b == 0:
        raise ZeroDivisionError("denominator of the angle is zero")
    return sin_pi_rational(2 * a + b, 2 * b, precision)
