"""Convex-core quantities along the path: bending angle, lengths, cusp threshold."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complexalg import cross_ratio, fixed_points, mobius_apply
from .reppath import DELTA1, DELTA4, XI, evaluate_word, rep_at


def p1(t):
    return 1 + 8 * t**2 + 21 * t**4 - 2 * t**6


def p2(t):
    return 2 * t**2 * (1 + t**2) ** 2


def p3(t):
    return 4 * t**5 * (3 - t**2)


def p1_prime(t):
    return 4 * t * (4 + 21 * t**2 - 3 * t**4)


def p2_prime(t):
    return 4 * t * (1 + 4 * t**2 + 3 * t**4)


def _check_t(t: float) -> None:
    if not t > 0:
        raise ValueError(f"parameter t must be positive, got {t}")


def theta(t: float) -> float:
    """Bending angle acos(p3/p2), branch [0, pi]."""
    _check_t(t)
    arg = p3(t) / p2(t)
    if abs(arg) > 1:
        raise ValueError(f"acos argument {arg} outside [-1, 1] at t={t}")
    return math.acos(arg)


def cosh_half_length_xi(t: float) -> float:
    """p1/p2, which is cosh(ell_xi / 2) = |tr rho_t(XI)| / 2."""
    return p1(t) / p2(t)


def cosh_half_length_eta(t: float) -> float:
    t2 = t * t
    return (-1 + 4 * t2 + 74 * t2**2 + 196 * t2**3 - t2**4) / (1 + t2) ** 4


def lengths(t: float) -> tuple[float, float]:
    """(ell_xi, ell_eta); ell_eta only exists for t in (t0, 1]."""
    _check_t(t)
    cx, ce = cosh_half_length_xi(t), cosh_half_length_eta(t)
    if cx < 1:
        raise ValueError(f"acosh argument {cx} < 1 for ell_xi at t={t}")
    if ce < 1:
        raise ValueError(f"acosh argument {ce} < 1 for ell_eta at t={t} (t <= t0?)")
    return 2 * math.acosh(cx), 2 * math.acosh(ce)


def ell_xi(t: float) -> float:
    _check_t(t)
    cx = cosh_half_length_xi(t)
    if cx < 1:
        raise ValueError(f"acosh argument {cx} < 1 for ell_xi at t={t}")
    return 2 * math.acosh(cx)


def big_l(t: float) -> float:
    """L(t) = ell_xi(t) / 4."""
    return ell_xi(t) / 4


T0_EXACT = "(5 + 3*sqrt(3) - sqrt(44 + 26*sqrt(3)))/2"


def t0() -> tuple[str, float]:
    """Infimum of the parameter interval: the smaller real root of
    (1+t^2)^2 - 2t(1+5t^2)."""
    s3 = math.sqrt(3)
    return T0_EXACT, 0.5 * (5 + 3 * s3 - math.sqrt(44 + 26 * s3))


def cusp_quartic(t: float) -> float:
    return (1 + t * t) ** 2 - 2 * t * (1 + 5 * t * t)


def trace_shift_xi(t: float) -> float:
    """2 + tr rho_t(XI), negative on (0, 1]."""
    _check_t(t)
    t2 = t * t
    return (-1 - 6 * t2 - 17 * t2**2 + 4 * t2**3) / (t2 * (1 + t2) ** 2)


def trace_shift_eta(t: float) -> float:
    """2 + tr rho_t(ETA) in factored form; vanishes at t0."""
    _check_t(t)
    t2 = t * t
    q = 2 * t * (1 + 5 * t2)
    return 4 * ((1 + t2) ** 2 - q) * ((1 + t2) ** 2 + q) / (1 + t2) ** 4


def crossratio_data(t: float) -> complex:
    """[p+ : rho(d4) p+ : p- : rho(d1^-1) p+] for the fixed points p+- of rho_t(XI)."""
    rep = rep_at(t)
    p_plus, p_minus = fixed_points(evaluate_word(rep, XI))
    q4 = mobius_apply(evaluate_word(rep, DELTA4), p_plus)
    q1 = mobius_apply(evaluate_word(rep, DELTA1.inverse()), p_plus)
    return cross_ratio(p_plus, q4, p_minus, q1)


def crossratio_closed_form(t: float) -> complex:
    """The factored expression for the same cross-ratio."""
    t2 = t * t
    root = math.sqrt(1 + 6 * t2 + 17 * t2**2 - 4 * t2**3)
    scale = (1 + 5 * t2 + root) / (2 * t * (t2 + 1) ** 3)
    return scale * complex(2 * t**3 * (t2 - 3), (1 - t2) * root)


def bending_angle_crossratio(t: float, tol: float = 1e-8) -> float:
    """pi - arg of the cross-ratio of support-plane points, arg in [0, 2pi).

    Raises if the result disagrees with :func:`theta`: the fixed-point
    labelling and branch conventions are part of the contract, so a
    mismatch is an error rather than something to silently correct.
    """
    _check_t(t)
    cr = crossratio_data(t)
    arg = cmath.phase(cr) % (2 * math.pi)
    angle = math.pi - arg
    expected = theta(t)
    if abs(angle - expected) > tol:
        raise ArithmeticError(
            f"cross-ratio angle {angle} disagrees with closed form {expected} at t={t}"
        )
    return angle


def support_discriminant() -> tuple[float, float]:
    """(|c - p1|^2 - r^2, |c - p2|^2 - r^2) at t = 1/2.

    c, r: center and radius of the circle through p+, p- and rho(d1^-1) p+;
    p1, p2 = +-((1+2i)/5) sqrt(7+i), the fixed points of B_{1/2}, with the
    root taken in the upper half plane.
    """
    c = -0.5 - 1j
    r2 = 5 / 4
    root = cmath.sqrt(7 + 1j)
    if root.imag < 0:
        root = -root
    q1 = (1 + 2j) / 5 * root
    q2 = -q1
    return abs(c - q1) ** 2 - r2, abs(c - q2) ** 2 - r2


def support_fixed_points() -> tuple[complex, complex]:
    root = cmath.sqrt(7 + 1j)
    if root.imag < 0:
        root = -root
    q1 = (1 + 2j) / 5 * root
    return q1, -q1


def circle_through(z1: complex, z2: complex, z3: complex) -> tuple[complex, float]:
    """Center and radius of the circle through three finite points."""
    w = (z3 - z1) / (z2 - z1)
    if abs(w.imag) < 1e-15:
        raise ValueError("collinear points")
    c = (z2 - z1) * (w - abs(w) ** 2) / (2j * w.imag) + z1
    return c, abs(z1 - c)


def support_circle() -> tuple[complex, float]:
    rep = rep_at(0.5)
    p_plus, p_minus = fixed_points(evaluate_word(rep, XI))
    q = mobius_apply(evaluate_word(rep, DELTA1.inverse()), p_plus)
    return circle_through(p_plus, p_minus, q)


@dataclass(frozen=True)
class BendData:
    t: float
    theta: float
    biglen: float
    ell_xi: float
    ell_eta: float
    alpha: float


def bend_data(t: float) -> BendData:
    lx, le = lengths(t)
    th = theta(t)
    big = lx / 4
    return BendData(t, th, big, lx, le, (math.pi + th) / (2 * big))
