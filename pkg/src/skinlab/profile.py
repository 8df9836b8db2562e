"""The grafted quadrilateral: profile functions, circle model, containments."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .corebend import big_l, t0, theta

# acos arguments this close to +-1 are clamped; anything further out is an error
ACOS_CLAMP = 1e-14


def _acos(v):
    v = np.asarray(v, dtype=float)
    if np.any(np.abs(v) > 1 + ACOS_CLAMP):
        raise ValueError("acos argument outside [-1, 1]")
    return np.arccos(np.clip(v, -1.0, 1.0))


def _check_x(x) -> None:
    x = np.asarray(x)
    if np.any((x < 0) | (x > 1)):
        raise ValueError("x must lie in [0, 1]")


def _check_domain(t: float) -> None:
    if not (t0()[1] < t <= 1):
        raise ValueError(f"t={t} outside (t0, 1]")


def alpha(t: float) -> float:
    """(pi + theta(t)) / (2 L(t))."""
    if not 0 < t <= 1:
        raise ValueError(f"t={t} outside (0, 1]")
    return (math.pi + theta(t)) / (2 * big_l(t))


def beta(x, t: float):
    """(1/L) acos(cosh(xL)/cosh L); vectorized in x."""
    _check_x(x)
    if not 0 < t <= 1:
        raise ValueError(f"t={t} outside (0, 1]")
    big = big_l(t)
    out = _acos(np.cosh(np.asarray(x, dtype=float) * big) / math.cosh(big)) / big
    return float(out) if np.ndim(out) == 0 else out


def profile_f(x, t: float):
    """F(x, t) = alpha(t) - beta(x, t): the upper graph of the region R_t."""
    _check_domain(t)
    return alpha(t) - beta(x, t)


@dataclass(frozen=True)
class GraftCircles:
    centers: tuple[complex, complex, complex, complex]
    radii: tuple[float, float, float, float]


def graft_circles(t: float) -> GraftCircles:
    """Circles bounding the quadrilateral Q_t: inside circle 1, outside 2, 3, 4.

    Circles 1 and 2 are concentric at 0 and carry the vertical sides.
    """
    _check_domain(t)
    big = big_l(t)
    el = math.exp(big)
    centers = (0j, 0j, complex(el * math.cosh(big)), cmath.exp(1j * (math.pi + theta(t))) * math.cosh(big))
    radii = (el, 1.0, el * math.sinh(big), math.sinh(big))
    return GraftCircles(centers, radii)


def normalizing_map(t: float) -> Callable[[complex], complex]:
    """z -> (log z - i(pi + theta)/2) / L with arg z in (0, 2pi)."""
    big = big_l(t)
    shift = (math.pi + theta(t)) / 2

    def f(z: complex) -> complex:
        if z == 0 or (z.imag == 0 and z.real > 0):
            raise ValueError(f"{z} lies on the branch cut arg = 0")
        arg = cmath.phase(z) % (2 * math.pi)
        return complex(math.log(abs(z)), arg - shift) / big

    return f


def boundary_arcs(t: float, samples: int) -> dict[str, np.ndarray]:
    """Sample the four boundary arcs of Q_t (open arcs, endpoints excluded).

    The corners are where circles meet: circle 4 meets circle 2 orthogonally
    at angle pi + theta - acos(1/cosh L) and touches circle 1 at angle
    pi + theta; circle 3 touches circle 2 at 1 and meets circle 1 at angle
    acos(1/cosh L).
    """
    big = big_l(t)
    th = theta(t)
    gc = graft_circles(t)
    corner = math.acos(1 / math.cosh(big))
    s = (np.arange(samples) + 0.5) / samples
    # vertical sides: arcs of circles 1 and 2 between the two horizontal circles
    phi1 = corner + s * (math.pi + th - corner)
    phi2 = s * (math.pi + th - corner)
    arcs = {
        "circle1": gc.radii[0] * np.exp(1j * phi1),
        "circle2": gc.radii[1] * np.exp(1j * phi2),
    }
    # horizontal sides: parametrize by modulus |z| in (1, e^L)
    rho = np.exp(s * big)
    # circle 3: cos(arg) = cosh(log|z| - L) / cosh L
    arcs["circle3"] = rho * np.exp(1j * np.arccos(np.cosh(np.log(rho) - big) / math.cosh(big)))
    # circle 4: centered on the ray at angle pi + theta
    ang4 = math.pi + th - np.arccos(np.cosh(np.log(rho)) / math.cosh(big))
    arcs["circle4"] = rho * np.exp(1j * ang4)
    return arcs


def normalize_check(t: float, samples: int = 256) -> float:
    """Max distance from the image of the Q_t boundary to the R_t boundary.

    Each sampled arc must land on its side of R_t: circle 1 on Re z = 1,
    circle 2 on Re z = 0, circle 4 on the graph of F and circle 3 on the
    graph of -F(1 - x).
    """
    _check_domain(t)
    f = normalizing_map(t)
    gc = graft_circles(t)
    arcs = boundary_arcs(t, samples)
    worst = 0.0
    for name, pts in arcs.items():
        k = int(name[-1]) - 1
        on_circle = np.max(np.abs(np.abs(pts - gc.centers[k]) - gc.radii[k]))
        worst = max(worst, float(on_circle))
        img = np.array([f(complex(z)) for z in pts])
        if name == "circle1":
            dev = np.abs(img.real - 1)
        elif name == "circle2":
            dev = np.abs(img.real)
        elif name == "circle4":
            dev = np.abs(img.imag - profile_f(np.clip(img.real, 0, 1), t))
        else:
            dev = np.abs(img.imag + profile_f(np.clip(1 - img.real, 0, 1), t))
        worst = max(worst, float(np.max(dev)))
    return worst


@dataclass(frozen=True)
class ProfileRegion:
    """Width-one region between the graphs of ``lower`` and ``upper``.

    For the grafted quadrilateral, upper(x) = F(x, t) and
    lower(x) = -F(1 - x, t).  Synthetic rectangles are available through
    :meth:`rectangle` for calibration.
    """

    t: float | None
    alpha: float
    upper: Callable[[np.ndarray], np.ndarray]
    lower: Callable[[np.ndarray], np.ndarray]
    resolution: int = 1024

    @classmethod
    def at(cls, t: float, resolution: int = 1024) -> "ProfileRegion":
        _check_domain(t)
        a = alpha(t)
        return cls(
            t,
            a,
            lambda x: profile_f(np.asarray(x, dtype=float), t),
            lambda x: -profile_f(1 - np.asarray(x, dtype=float), t),
            resolution,
        )

    @classmethod
    def rectangle(cls, height: float) -> "ProfileRegion":
        h = height / 2
        return cls(
            None,
            h,
            lambda x: np.full(np.shape(x), h, dtype=float),
            lambda x: np.full(np.shape(x), -h, dtype=float),
        )

    def heights(self, x) -> np.ndarray:
        return self.upper(x) - self.lower(x)

    def grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.resolution)


def region_contains(outer_t: float, inner_t: float, grid: int = 1024) -> tuple[bool, float]:
    """Whether R_inner lies inside R_outer: F(x, outer) > F(x, inner) on the grid.

    By the point symmetry of R_t, the upper-graph comparison also covers the
    lower graphs.  Returns (contained, minimum margin).
    """
    x = np.linspace(0.0, 1.0, grid)
    diff = profile_f(x, outer_t) - profile_f(x, inner_t)
    margin = float(np.min(diff))
    return margin > 0, margin


def containment_bound(outer_t: float, inner_t: float) -> float:
    """Grid-free lower bound on min_x F(x, outer) - F(x, inner) for inner < outer < 1
    or outer < inner.

    The difference of beta values is monotone in x between its values at x = 0
    and x = 1 (where it vanishes), so the minimum over x is attained at an end.
    """
    da = alpha(outer_t) - alpha(inner_t)
    db = beta(0.0, outer_t) - beta(0.0, inner_t)
    return min(da, da - db)
