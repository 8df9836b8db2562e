"""Exact arithmetic in Q(sqrt d) and comparison across different d."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .interval import RatInterval, as_fraction, sqrt_enclosure

# refinement starts here and doubles up to the cap
START_BITS = 128
CAP_BITS = 4096


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1
    UNDECIDED = None

    @classmethod
    def of_sign(cls, s: int) -> "Ordering":
        return {-1: cls.LESS, 0: cls.EQUAL, 1: cls.GREATER}[s]


def _squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadSurd:
    """a + b sqrt(d) with rational a, b and square-free d >= 1."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if not _squarefree(self.d):
            raise ValueError(f"d={self.d} must be a positive square-free integer")

    @classmethod
    def rational(cls, v, d: int = 1) -> "QuadSurd":
        return cls(as_fraction(v), Fraction(0), d)

    def is_rational(self) -> bool:
        return self.b == 0 or self.d == 1

    def _coerce(self, other) -> "QuadSurd":
        if not isinstance(other, QuadSurd):
            return QuadSurd.rational(other, self.d)
        if other.d != self.d:
            if other.b == 0:
                return QuadSurd(other.a, 0, self.d)
            raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")
        return other

    def _same_field(self, other) -> tuple["QuadSurd", "QuadSurd"]:
        if isinstance(other, QuadSurd) and other.d != self.d and self.b == 0:
            return QuadSurd(self.a, 0, other.d), other
        return self, self._coerce(other)

    def __add__(self, other) -> "QuadSurd":
        x, y = self._same_field(other)
        return QuadSurd(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadSurd":
        x, y = self._same_field(other)
        return QuadSurd(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other) -> "QuadSurd":
        return (-self) + other

    def __mul__(self, other) -> "QuadSurd":
        x, y = self._same_field(other)
        return QuadSurd(x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadSurd":
        return surd_pow(self, n)

    def conjugate(self) -> "QuadSurd":
        return QuadSurd(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def sign(self) -> int:
        """Exact sign of a + b sqrt(d)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 d
        n = self.norm()
        if n == 0:
            return 0
        return sa if n > 0 else sb

    def enclose(self, bits: int) -> RatInterval:
        root = sqrt_enclosure(self.d, Fraction(1, 1 << bits))
        return self.a + self.b * root

    def __float__(self) -> float:
        return float(self.enclose(64).mid())

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.d})"


def surd_pow(s: QuadSurd, n: int) -> QuadSurd:
    """s**n by repeated squaring; exact."""
    if n < 0:
        raise ValueError("negative exponent")
    result = QuadSurd.rational(1, s.d)
    base = s
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def surd_compare_bits(left: QuadSurd, right: QuadSurd) -> tuple[Ordering, int]:
    """Ordering of left against right and the precision that decided it.

    Same field (or either side rational): exact sign of the difference, bits 0.
    Otherwise both sides are enclosed with sqrt intervals of width 2^-bits,
    starting at START_BITS and doubling until the intervals separate; past
    CAP_BITS the answer is UNDECIDED.
    """
    if left.is_rational() and right.is_rational():
        la = left.a + (left.b if left.d == 1 else 0)
        ra = right.a + (right.b if right.d == 1 else 0)
        return Ordering.of_sign((la > ra) - (la < ra)), 0
    if left.d == right.d or left.b == 0 or right.b == 0:
        return Ordering.of_sign((left - right).sign()), 0
    bits = START_BITS
    while bits <= CAP_BITS:
        x, y = left.enclose(bits), right.enclose(bits)
        if x.strictly_below(y):
            return Ordering.LESS, bits
        if x.strictly_above(y):
            return Ordering.GREATER, bits
        bits *= 2
    return Ordering.UNDECIDED, CAP_BITS


def surd_compare(left: QuadSurd, right: QuadSurd) -> Ordering:
    return surd_compare_bits(left, right)[0]
