"""Certified enclosures of pi, cos, atan, acos, log, exp and acosh.

Every function works on rational intervals and returns an interval that is
guaranteed to contain the true value: series are summed with outward-rounded
dyadic arithmetic at ``bits`` fractional bits and closed off with an explicit
remainder bound.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .interval import RatInterval, as_fraction, sqrt_interval

DEFAULT_BITS = 128
# extra working bits to absorb per-term rounding
GUARD = 24


def _ulp(bits: int) -> Fraction:
    return Fraction(1, 1 << bits)


def _atan_series(v: RatInterval, bits: int) -> RatInterval:
    """atan over a non-negative interval inside [0, 1/2] by the alternating series.

    Evaluated separately at each endpoint (atan is increasing).
    """
    if v.lo < 0 or v.hi > Fraction(1, 2):
        raise ValueError("series range is [0, 1/2]")
    lo = _atan_series_point(v.lo, bits).lo
    hi = _atan_series_point(v.hi, bits).hi
    return RatInterval(lo, hi)


def _atan_series_point(c: Fraction, bits: int) -> RatInterval:
    if c == 0:
        return RatInterval.point(0)
    # outward rounding keeps positive terms >= one ulp, so stop there
    eps = _ulp(bits)
    x2 = RatInterval.point(c * c).rounded(bits)
    power = RatInterval.point(c)  # c^(2k+1)
    total = RatInterval.point(0)
    k = 0
    while True:
        term = (power / (2 * k + 1)).rounded(bits)
        if term.hi <= eps:
            # alternating, decreasing terms: the tail lies between 0 and +-term
            tail = RatInterval(-term.hi, 0) if k % 2 else RatInterval(0, term.hi)
            return total + tail
        total = total - term if k % 2 else total + term
        power = (power * x2).rounded(bits)
        k += 1


def _pi_working(bits: int) -> RatInterval:
    """16 atan(1/5) - 4 atan(1/239)."""
    a5 = _atan_series_point(Fraction(1, 5), bits)
    a239 = _atan_series_point(Fraction(1, 239), bits)
    return 16 * a5 - 4 * a239


@lru_cache(maxsize=64)
def pi_enclosure(bits: int) -> RatInterval:
    """Interval [k/2^bits, (k+1)/2^bits] containing pi.

    The enclosure is the grid cell of pi on the 2^-bits grid, so enclosures
    at higher precision are nested in lower ones.
    """
    if bits < 8:
        raise ValueError("bits must be >= 8")
    work = bits + GUARD
    while True:
        p = _pi_working(work)
        lo = math.floor(p.lo * (1 << bits))
        hi = math.floor(p.hi * (1 << bits))
        if lo == hi:
            return RatInterval(Fraction(lo, 1 << bits), Fraction(lo + 1, 1 << bits))
        work += GUARD


def _atan_point(c: Fraction, bits: int) -> RatInterval:
    if c < 0:
        return -_atan_point(-c, bits)
    if c > 1:
        half_pi = pi_enclosure(bits) / 2
        return half_pi - _atan_point(1 / c, bits)
    if c > Fraction(1, 2):
        # atan c = 2 atan(c / (1 + sqrt(1 + c^2))), argument drops below 1/2
        root = sqrt_interval(RatInterval.point(1 + c * c), bits)
        w = (c / (1 + root)).rounded(bits)
        return 2 * _atan_series(w, bits)
    return _atan_series_point(c, bits)


def atan_enclosure(x: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
    x = RatInterval.lift(x)
    work = bits + GUARD
    return RatInterval(_atan_point(x.lo, work).lo, _atan_point(x.hi, work).hi)


def _acos_point(c: Fraction, bits: int) -> RatInterval:
    """acos c = 2 atan(sqrt((1 - c)/(1 + c))) for -1 < c <= 1."""
    if c == 1:
        return RatInterval.point(0)
    if c == -1:
        return pi_enclosure(bits)
    q = sqrt_interval(RatInterval.point((1 - c) / (1 + c)), bits)
    return 2 * RatInterval(_atan_point(q.lo, bits).lo, _atan_point(q.hi, bits).hi)


def acos_enclosure(x: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
    x = RatInterval.lift(x)
    if x.lo < -1 or x.hi > 1:
        raise ValueError("acos needs an interval inside [-1, 1]")
    work = bits + GUARD
    # decreasing
    return RatInterval(_acos_point(x.hi, work).lo, _acos_point(x.lo, work).hi)


def _cos_point(c: Fraction, bits: int, terms: int | None) -> RatInterval:
    """Taylor sum with the Lagrange remainder |c|^(2N) / (2N)!."""
    x2 = RatInterval.point(c * c).rounded(bits)
    term = RatInterval.point(1)  # (-1)^k c^(2k) / (2k)!
    total = RatInterval.point(0)
    eps = _ulp(bits)
    k = 0
    while True:
        if terms is not None and k == terms:
            break
        if terms is None and term.mag() <= eps:
            break
        total = total + term
        term = (-term * x2 / ((2 * k + 1) * (2 * k + 2))).rounded(bits)
        k += 1
    # Lagrange remainder for N = k terms
    rem = RatInterval.point(abs(c) ** (2 * k) / math.factorial(2 * k)).rounded(bits).hi
    out = total + RatInterval(-rem, rem)
    return out.intersect(RatInterval(-1, 1))


def cos_enclosure(x: RatInterval, terms: int | None = None, bits: int = DEFAULT_BITS) -> RatInterval:
    """cos over an interval with |x| <= 4.

    On [0, 3] and [-3, 0] (inside the monotone ranges, as pi > 3) only the
    endpoints are evaluated; otherwise the midpoint value is widened by the
    radius, since |cos'| <= 1.  ``terms`` fixes the number of Taylor terms;
    by default terms are added until they drop below 2^-bits.
    """
    x = RatInterval.lift(x)
    if x.mag() > 4:
        raise ValueError("cos_enclosure supports |x| <= 4")
    work = bits + GUARD
    if x.lo >= 0 and x.hi <= 3:
        return RatInterval(_cos_point(x.hi, work, terms).lo, _cos_point(x.lo, work, terms).hi)
    if x.hi <= 0 and x.lo >= -3:
        return RatInterval(_cos_point(x.lo, work, terms).lo, _cos_point(x.hi, work, terms).hi)
    m = _cos_point(x.mid(), work, terms)
    r = x.radius()
    return RatInterval(max(m.lo - r, Fraction(-1)), min(m.hi + r, Fraction(1)))


def _atanh_point(z: Fraction, bits: int) -> RatInterval:
    """atanh z for 0 <= z <= 1/3: sum z^(2k+1)/(2k+1), tail <= next term / (1 - z^2)."""
    if z == 0:
        return RatInterval.point(0)
    eps = _ulp(bits)
    z2 = RatInterval.point(z * z).rounded(bits)
    power = RatInterval.point(z)
    total = RatInterval.point(0)
    k = 0
    while True:
        term = (power / (2 * k + 1)).rounded(bits)
        if term.hi <= eps:
            tail = term.hi / (1 - z * z)
            return total + RatInterval(0, tail)
        total = total + term
        power = (power * z2).rounded(bits)
        k += 1


def _log2(bits: int) -> RatInterval:
    return 2 * _atanh_point(Fraction(1, 3), bits)


def _log_point(c: Fraction, bits: int) -> RatInterval:
    if c <= 0:
        raise ValueError("log of a non-positive number")
    if c == 1:
        return RatInterval.point(0)
    # c = 2^k m with 1 <= m < 2
    k = c.numerator.bit_length() - c.denominator.bit_length()
    m = c / Fraction(2) ** k
    if m < 1:
        k -= 1
        m *= 2
    elif m >= 2:
        k += 1
        m /= 2
    z = (m - 1) / (m + 1)
    return k * _log2(bits) + 2 * _atanh_point(z, bits)


def log_enclosure(x: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
    x = RatInterval.lift(x)
    if x.lo <= 0:
        raise ValueError("log needs a positive interval")
    work = bits + GUARD
    return RatInterval(_log_point(x.lo, work).lo, _log_point(x.hi, work).hi)


def _exp_point(c: Fraction, bits: int) -> RatInterval:
    # halve until |y| <= 1/2, then square back up
    k = 0
    y = c
    while abs(y) > Fraction(1, 2):
        y /= 2
        k += 1
    work = bits + 2 * k + 8
    eps = _ulp(work)
    term = RatInterval.point(1)
    total = RatInterval.point(0)
    n = 0
    while term.mag() > eps:
        total = total + term
        n += 1
        term = (term * y / n).rounded(work)
    # Lagrange remainder |y|^n / n! * e^|y| with e^(1/2) < 2
    rem = 2 * term.mag()
    out = total + RatInterval(-rem, rem)
    for _ in range(k):
        out = out.square().rounded(work)
    return out


def exp_enclosure(x: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
    x = RatInterval.lift(x)
    work = bits + GUARD
    return RatInterval(_exp_point(x.lo, work).lo, _exp_point(x.hi, work).hi)


def acosh_enclosure(x: RatInterval, bits: int = DEFAULT_BITS) -> RatInterval:
    """acosh x = log(x + sqrt(x^2 - 1)) for x >= 1; increasing."""
    x = RatInterval.lift(x)
    if x.lo < 1:
        raise ValueError("acosh needs an interval inside [1, inf)")
    work = bits + GUARD

    def point(c: Fraction) -> RatInterval:
        root = sqrt_interval(RatInterval.point(c * c - 1), work)
        arg = c + root
        return RatInterval(_log_point(arg.lo, work).lo, _log_point(arg.hi, work).hi)

    return RatInterval(point(x.lo).lo, point(x.hi).hi)


def as_interval(v) -> RatInterval:
    return v if isinstance(v, RatInterval) else RatInterval.point(as_fraction(v))
