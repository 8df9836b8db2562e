"""Möbius and anti-Möbius maps of the Riemann sphere.

Points of the extended plane are Python ``complex`` values, with the point at
infinity represented by :data:`INF`.  Maps carry their four matrix entries as
given; no sign normalization is applied, because the labelling of fixed
points depends on the chosen SL(2, C) lift.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

INF = complex(math.inf, 0.0)

# entrywise tolerance for equality of group elements (up to sign)
GROUP_TOL = 1e-9


class DegenerateError(ValueError):
    """Raised for repeated points, singular matrices and similar degeneracies."""


def is_inf(z: complex) -> bool:
    return cmath.isinf(z)


def chordal_distance(z: complex, w: complex) -> float:
    """Chordal distance on the Riemann sphere of diameter 1 (range [0, 1])."""
    zi, wi = is_inf(z), is_inf(w)
    if zi and wi:
        return 0.0
    if zi:
        return 1.0 / math.hypot(1.0, abs(w))
    if wi:
        return 1.0 / math.hypot(1.0, abs(z))
    if abs(z) > 1 and abs(w) > 1:
        # z -> 1/z is a chordal isometry; avoids overflow far out
        z, w = 1 / z, 1 / w
    return abs(z - w) / (math.hypot(1.0, abs(z)) * math.hypot(1.0, abs(w)))


def sphere_point(z: complex) -> tuple[float, float, float]:
    """Inverse stereographic projection onto the unit sphere."""
    if is_inf(z):
        return (0.0, 0.0, 1.0)
    r2 = abs(z) ** 2
    return (2 * z.real / (1 + r2), 2 * z.imag / (1 + r2), (r2 - 1) / (1 + r2))


@dataclass(frozen=True)
class MobiusMap:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        if self.det() == 0:
            raise DegenerateError("singular Möbius matrix")

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def trace(self) -> complex:
        return self.a + self.d

    def normalized(self) -> "MobiusMap":
        """Scale to determinant 1 (principal square root of the determinant)."""
        s = cmath.sqrt(self.det())
        return MobiusMap(self.a / s, self.b / s, self.c / s, self.d / s)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        det = self.det()
        return MobiusMap(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def conj(self) -> "MobiusMap":
        """Entrywise complex conjugate."""
        return MobiusMap(self.a.conjugate(), self.b.conjugate(), self.c.conjugate(), self.d.conjugate())

    def entries(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, z: complex) -> complex:
        return mobius_apply(self, z)

    def equals_up_to_sign(self, other: "MobiusMap", tol: float = GROUP_TOL) -> bool:
        """Equality in PSL(2, C), compared on determinant-1 normalizations."""
        p = self.normalized().entries()
        q = other.normalized().entries()
        plus = max(abs(x - y) for x, y in zip(p, q))
        minus = max(abs(x + y) for x, y in zip(p, q))
        return min(plus, minus) <= tol


@dataclass(frozen=True)
class AntiMobiusMap:
    """The map z -> m(conj(z))."""

    m: MobiusMap

    def __call__(self, z: complex) -> complex:
        return mobius_apply(self.m, z.conjugate())

    def inverse(self) -> "AntiMobiusMap":
        # z = m(conj(w))  <=>  w = conj(m^-1(z)) = conj(m^-1)(conj z)
        return AntiMobiusMap(self.m.inverse().conj())

    def compose(self, other: "AntiMobiusMap") -> MobiusMap:
        """self o other, which preserves orientation."""
        return self.m @ other.m.conj()


def mobius_apply(m: MobiusMap, z: complex) -> complex:
    """Apply (az+b)/(cz+d) on the extended plane."""
    if is_inf(z):
        return INF if m.c == 0 else m.a / m.c
    den = m.c * z + m.d
    if den == 0:
        return INF
    return (m.a * z + m.b) / den


def _to_zero_one_inf(z1: complex, z2: complex, z3: complex) -> MobiusMap:
    """The map sending (z1, z2, z3) to (0, 1, inf)."""
    pts = (z1, z2, z3)
    for i in range(3):
        for j in range(i + 1, 3):
            if (is_inf(pts[i]) and is_inf(pts[j])) or pts[i] == pts[j]:
                raise DegenerateError("triple has repeated entries")
    if is_inf(z1):
        return MobiusMap(0, z2 - z3, 1, -z3)
    if is_inf(z2):
        return MobiusMap(1, -z1, 1, -z3)
    if is_inf(z3):
        return MobiusMap(1, -z1, 0, z2 - z1)
    return MobiusMap(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def mobius_from_triples(v, w) -> MobiusMap:
    """The unique Möbius map with v[i] -> w[i], normalized to determinant 1."""
    fv = _to_zero_one_inf(*v)
    fw = _to_zero_one_inf(*w)
    return (fw.inverse() @ fv).normalized()


def anti_conjugate(psi: AntiMobiusMap, m: MobiusMap) -> MobiusMap:
    """psi o m o psi^-1 as a Möbius map (defined up to sign)."""
    # psi(m(psi^-1 z)) = P conj(M) conj(P^-1) applied to z, with psi = P o conj
    return psi.m @ m.conj() @ psi.inverse().m.conj()


def trace_sq(m: MobiusMap) -> complex:
    return m.normalized().trace() ** 2


def fixed_points(m: MobiusMap) -> tuple[complex, complex]:
    """Fixed points (p_plus, p_minus) of m, using the entries as given.

    With the matrix scaled by the principal square root of its determinant
    (a no-op for determinant-1 input), p_plus = (a - d + r)/(2c) and
    p_minus = (a - d - r)/(2c) where r is the principal square root of
    tr^2 - 4, evaluated as (a - d)^2 + 4bc.  Replacing the matrix by its negative swaps the labels.
    """
    a, b, c, d = m.normalized().entries()
    if abs(b) == 0 and abs(c) == 0 and abs(a - d) == 0:
        raise DegenerateError("identity has no isolated fixed points")
    # equals tr^2 - 4 at determinant 1, without cancelling away a small bc
    r = cmath.sqrt((a - d) ** 2 + 4 * b * c)
    if c == 0:
        # fixes infinity; the other root of (a - d) z + b = 0
        if a == d:
            return (INF, INF)
        finite = b / (d - a)
        # the root labelled + is the one at infinity when a - d + r != 0
        return (INF, finite) if abs((a - d) + r) > abs((a - d) - r) else (finite, INF)
    plus, minus = a - d + r, a - d - r
    if plus == 0 and minus == 0:
        # a == d and bc == 0 with c != 0, so b == 0: double root at 0
        return (0j, 0j)
    # the smaller-numerator root loses digits to cancellation; recover it
    # from the product of the roots, -b/c
    if abs(plus) >= abs(minus):
        return (plus / (2 * c), -2 * b / plus)
    return (-2 * b / minus, minus / (2 * c))


def translation_length(m: MobiusMap) -> float:
    """2 acosh(|tr|/2) for a determinant-1 lift with |tr| > 2."""
    half = abs(m.normalized().trace()) / 2
    if half <= 1:
        raise ValueError(f"|trace| = {2 * half} <= 2: not loxodromic with real length")
    return 2 * math.acosh(half)


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    """[a:b:c:d] = ((d-a)/(d-c)) * ((b-c)/(b-a)), extended to infinity."""
    pts = (a, b, c, d)
    n_inf = sum(is_inf(z) for z in pts)
    if n_inf > 1:
        raise DegenerateError("cross-ratio with repeated point at infinity")
    # factors (numerator, denominator); a factor containing infinity cancels
    num = [(d, a), (b, c)]
    den = [(d, c), (b, a)]

    def prod(pairs):
        out = 1
        for x, y in pairs:
            if is_inf(x) or is_inf(y):
                continue
            out *= x - y
        return out

    top, bot = prod(num), prod(den)
    if bot == 0:
        if top == 0:
            raise DegenerateError("degenerate cross-ratio (0/0)")
        return INF
    return top / bot
