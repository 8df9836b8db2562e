"""Closed intervals with exact rational endpoints.

Endpoints are :class:`fractions.Fraction` values.  Arithmetic is exact; to
keep denominators bounded, long computations call :meth:`RatInterval.rounded`
which moves the endpoints outward onto the dyadic grid 2^-bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, Rational)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"exact rational expected, got {type(v).__name__}")


def floor_dyadic(v: Fraction, bits: int) -> Fraction:
    return Fraction(math.floor(v * (1 << bits)), 1 << bits)


def ceil_dyadic(v: Fraction, bits: int) -> Fraction:
    return Fraction(math.ceil(v * (1 << bits)), 1 << bits)


@dataclass(frozen=True)
class RatInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_fraction(self.lo), as_fraction(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, v) -> "RatInterval":
        v = as_fraction(v)
        return cls(v, v)

    @staticmethod
    def lift(v) -> "RatInterval":
        return v if isinstance(v, RatInterval) else RatInterval.point(v)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def contains(self, v) -> bool:
        if isinstance(v, RatInterval):
            return self.lo <= v.lo and v.hi <= self.hi
        return self.lo <= v <= self.hi

    def mag(self) -> Fraction:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def rounded(self, bits: int) -> "RatInterval":
        """Outward rounding onto multiples of 2^-bits."""
        return RatInterval(floor_dyadic(self.lo, bits), ceil_dyadic(self.hi, bits))

    def __add__(self, other) -> "RatInterval":
        o = RatInterval.lift(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> "RatInterval":
        return self + (-RatInterval.lift(other))

    def __rsub__(self, other) -> "RatInterval":
        return RatInterval.lift(other) - self

    def __mul__(self, other) -> "RatInterval":
        o = RatInterval.lift(other)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(p), max(p))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "RatInterval":
        return self * RatInterval.lift(other).reciprocal()

    def __rtruediv__(self, other) -> "RatInterval":
        return RatInterval.lift(other) * self.reciprocal()

    def square(self) -> "RatInterval":
        if self.lo >= 0:
            return RatInterval(self.lo**2, self.hi**2)
        if self.hi <= 0:
            return RatInterval(self.hi**2, self.lo**2)
        return RatInterval(Fraction(0), self.mag() ** 2)

    def __pow__(self, n: int) -> "RatInterval":
        if n < 0:
            return (self**-n).reciprocal()
        if n % 2 == 0:
            return self.square() ** (n // 2) if n else RatInterval.point(1)
        return RatInterval(self.lo**n, self.hi**n)

    def intersect(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def strictly_below(self, other) -> bool:
        return self.hi < RatInterval.lift(other).lo

    def strictly_above(self, other) -> bool:
        return self.lo > RatInterval.lift(other).hi

    def __float__(self) -> float:
        return float(self.mid())

    def __repr__(self) -> str:
        return f"RatInterval([{float(self.lo)!r}, {float(self.hi)!r}], width={float(self.width()):.3g})"


def sqrt_floor(v: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2^-bits whose square is <= v (v >= 0)."""
    scaled = v * (1 << (2 * bits))
    return Fraction(math.isqrt(math.floor(scaled)), 1 << bits)


def sqrt_ceil(v: Fraction, bits: int) -> Fraction:
    """Smallest multiple of 2^-bits whose square is >= v (v >= 0)."""
    n = math.ceil(v * (1 << (2 * bits)))
    r = math.isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << bits)


def sqrt_interval(x: RatInterval, bits: int) -> RatInterval:
    """Enclosure of sqrt over x, endpoints on the 2^-bits grid (exact when possible)."""
    if x.lo < 0:
        raise ValueError("square root of an interval reaching below zero")
    lo = _exact_sqrt(x.lo)
    hi = _exact_sqrt(x.hi)
    return RatInterval(lo if lo is not None else sqrt_floor(x.lo, bits), hi if hi is not None else sqrt_ceil(x.hi, bits))


def _exact_sqrt(v: Fraction) -> Fraction | None:
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_sqrt(v) -> Fraction:
    """Square root of a rational that is a perfect square; raises otherwise."""
    r = _exact_sqrt(as_fraction(v))
    if r is None:
        raise ValueError(f"{v} is not the square of a rational")
    return r


def sqrt_enclosure(d: int, width) -> RatInterval:
    """Interval of width <= ``width`` containing sqrt(d), d a positive integer.

    Perfect squares give a point interval.  Otherwise the endpoints are
    consecutive multiples of 2^-k with 2^-k <= width, found with integer
    square roots, so lo^2 < d < hi^2 holds exactly.
    """
    width = as_fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if d <= 0:
        raise ValueError("d must be a positive integer")
    r = math.isqrt(d)
    if r * r == d:
        return RatInterval.point(r)
    k = 0
    while Fraction(1, 1 << k) > width:
        k += 1
    lo = math.isqrt(d << (2 * k))
    return RatInterval(Fraction(lo, 1 << k), Fraction(lo + 1, 1 << k))
