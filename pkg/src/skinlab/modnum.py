"""Conformal modulus of the profile regions R_t by discrete Dirichlet energy.

The region between ``lower(x)`` and ``upper(x)`` over 0 <= x <= 1 is meshed
by the vertical shear (x, s) -> (x, lower(x) + s (upper(x) - lower(x))), and
the Dirichlet energy is minimized over continuous piecewise-bilinear
functions on that boundary-fitted quadrilateral mesh.

Convention: ``mod_h`` is the extremal distance between the two graph sides,
so a rectangle of width 1 and height h has mod_h = h; ``mod_w`` is the
extremal distance between the vertical sides (1/h for the rectangle).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import pyamg
import scipy.sparse as sp
from scipy.sparse.linalg import cg

from .profile import ProfileRegion

CG_RTOL = 1e-10
MIN_ORDER = 1.5

# 2x2 Gauss rule on the reference square [-1, 1]^2
_G = 1 / math.sqrt(3)
_GAUSS = [(-_G, -_G), (_G, -_G), (_G, _G), (-_G, _G)]


class ModulusError(RuntimeError):
    """Solver failure: non-convergence, degenerate region or poor grid convergence."""


@dataclass
class ModulusResult:
    t: float | None
    mod_h: float
    mod_w: float
    levels: list[int]
    energies_h: list[float]
    energies_w: list[float]
    order_h: float
    order_w: float
    est_error: float
    raw_h: list[float] = field(default_factory=list)
    raw_w: list[float] = field(default_factory=list)

    convention = "mod_h: extremal distance between graph sides (rectangle of height h -> h)"

    def as_dict(self) -> dict:
        return {
            "t": self.t,
            "mod_h": self.mod_h,
            "mod_w": self.mod_w,
            "est_error": self.est_error,
            "order_h": self.order_h,
            "order_w": self.order_w,
            "grid_levels": self.levels,
            "energies_h": self.energies_h,
            "energies_w": self.energies_w,
            "convention": self.convention,
        }


def graded_abscissae(nx: int) -> np.ndarray:
    """x = u^2 (3 - 2u) on a uniform u grid.

    The graphs of R_t have square-root cusps at x = 0 and x = 1; in u they
    become linear, which keeps the sheared cells from collapsing there.
    """
    u = np.linspace(0.0, 1.0, nx + 1)
    return u * u * (3 - 2 * u)


def mesh_nodes(region: ProfileRegion, nx: int, ns: int) -> tuple[np.ndarray, np.ndarray]:
    """Node coordinates, arrays of shape (nx+1, ns+1)."""
    x = graded_abscissae(nx)
    lo = np.asarray(region.lower(x), dtype=float)
    hi = np.asarray(region.upper(x), dtype=float)
    if np.any(hi - lo <= 0):
        raise ModulusError("graphs touch or cross: region is degenerate")
    s = np.linspace(0.0, 1.0, ns + 1)
    X = np.repeat(x[:, None], ns + 1, axis=1)
    Y = lo[:, None] + s[None, :] * (hi - lo)[:, None]
    return X, Y


def stiffness(X: np.ndarray, Y: np.ndarray) -> sp.csr_matrix:
    """Bilinear finite-element stiffness matrix on the structured quad mesh."""
    nx, ns = X.shape[0] - 1, X.shape[1] - 1
    idx = np.arange((nx + 1) * (ns + 1)).reshape(nx + 1, ns + 1)
    # element corners counter-clockwise in the (x, s) reference orientation
    corners = [idx[:-1, :-1], idx[1:, :-1], idx[1:, 1:], idx[:-1, 1:]]
    ex = np.stack([X.ravel()[c].ravel() for c in corners], axis=1)
    ey = np.stack([Y.ravel()[c].ravel() for c in corners], axis=1)
    ref = np.array([(-1, -1), (1, -1), (1, 1), (-1, 1)], dtype=float)
    ke = np.zeros((ex.shape[0], 4, 4))
    for xi, eta in _GAUSS:
        dxi = ref[:, 0] * (1 + eta * ref[:, 1]) / 4
        deta = ref[:, 1] * (1 + xi * ref[:, 0]) / 4
        j11 = ex @ dxi
        j12 = ey @ dxi
        j21 = ex @ deta
        j22 = ey @ deta
        det = j11 * j22 - j12 * j21
        if np.any(det <= 0):
            raise ModulusError("inverted mesh element")
        # physical gradients of the four shape functions
        gx = (j22[:, None] * dxi[None, :] - j12[:, None] * deta[None, :]) / det[:, None]
        gy = (-j21[:, None] * dxi[None, :] + j11[:, None] * deta[None, :]) / det[:, None]
        ke += (gx[:, :, None] * gx[:, None, :] + gy[:, :, None] * gy[:, None, :]) * det[:, None, None]
    conn = np.stack([c.ravel() for c in corners], axis=1)
    rows = np.repeat(conn, 4, axis=1).ravel()
    cols = np.tile(conn, (1, 4)).ravel()
    n = (nx + 1) * (ns + 1)
    return sp.coo_matrix((ke.ravel(), (rows, cols)), shape=(n, n)).tocsr()


def dirichlet_energy(K: sp.csr_matrix, fixed: np.ndarray, values: np.ndarray) -> float:
    """Minimum of u^T K u subject to u[fixed] = values."""
    n = K.shape[0]
    free = np.setdiff1d(np.arange(n), fixed)
    u = np.zeros(n)
    u[fixed] = values
    kff = K[free][:, free].tocsr()
    rhs = -(K[free][:, fixed] @ values)
    # "local" weighting bounds the spectral radius by row sums instead of a
    # randomly started power iteration, so repeated solves are bit-identical
    ml = pyamg.smoothed_aggregation_solver(
        kff, symmetry="symmetric", smooth=("jacobi", {"omega": 4.0 / 3.0, "weighting": "local"})
    )
    uf, info = cg(kff, rhs, x0=np.zeros(len(free)), rtol=CG_RTOL, atol=0.0, M=ml.aspreconditioner(), maxiter=2000)
    if info != 0:
        raise ModulusError(f"conjugate gradient did not converge (info={info})")
    u[free] = uf
    return float(u @ (K @ u))


def level_energies(region: ProfileRegion, nx: int, ns: int) -> tuple[float, float]:
    """(E_h, E_w) on one mesh: potentials across the graph sides and across the vertical sides."""
    X, Y = mesh_nodes(region, nx, ns)
    K = stiffness(X, Y)
    idx = np.arange(K.shape[0]).reshape(nx + 1, ns + 1)
    bottom, top = idx[:, 0], idx[:, -1]
    left, right = idx[0, :], idx[-1, :]
    e_h = dirichlet_energy(K, np.concatenate([bottom, top]), np.concatenate([np.zeros(nx + 1), np.ones(nx + 1)]))
    e_w = dirichlet_energy(K, np.concatenate([left, right]), np.concatenate([np.zeros(ns + 1), np.ones(ns + 1)]))
    return e_h, e_w


def levels_for(base_resolution: int, refinements: int) -> list[int]:
    """Grid sizes, coarsest first: the finest has ``base_resolution`` cells
    across x and each of the ``refinements`` coarser levels halves it."""
    if base_resolution < 32:
        raise ValueError("base_resolution must be >= 32")
    if refinements < 1:
        raise ValueError("refinements must be >= 1")
    levels = [base_resolution >> k for k in range(refinements, -1, -1)]
    if levels[0] < 4 or any(2 * a != b for a, b in zip(levels, levels[1:])):
        raise ValueError(f"base_resolution {base_resolution} does not halve {refinements} times to >= 4")
    return levels


def _order(values: Sequence[float]) -> float:
    """Observed convergence order from the last three values of a halving sequence."""
    d1 = values[-2] - values[-3]
    d2 = values[-1] - values[-2]
    scale = max(abs(v) for v in values)
    if abs(d2) <= 1e-9 * scale:
        # exact up to solver tolerance (rectangles: bilinears reproduce the potential)
        return math.inf
    if d1 == 0 or d1 * d2 < 0:
        return math.nan
    return math.log2(abs(d1 / d2))


def _richardson(values: Sequence[float]) -> list[float]:
    """Order-2 extrapolations of consecutive pairs."""
    return [b + (b - a) / 3 for a, b in zip(values, values[1:])]


def solve_modulus(region: ProfileRegion, base_resolution: int = 256, refinements: int = 3) -> ModulusResult:
    """Modulus of ``region`` in both side pairings, extrapolated over grid levels.

    Each level uses n cells across x and 2n across the height.  Energies
    are extrapolated assuming second order; the observed order of the two
    finest differences must exceed MIN_ORDER for both pairings.
    """
    levels = levels_for(base_resolution, refinements)
    eh, ew = [], []
    for n in levels:
        a, b = level_energies(region, n, 2 * n)
        eh.append(a)
        ew.append(b)
    order_h = _order(eh) if len(levels) >= 3 else math.nan
    order_w = _order(ew) if len(levels) >= 3 else math.nan
    for name, order in (("mod_h", order_h), ("mod_w", order_w)):
        if len(levels) >= 3 and not order > MIN_ORDER:
            raise ModulusError(f"{name}: observed convergence order {order:.3f} below {MIN_ORDER}")
    rich_h, rich_w = _richardson(eh), _richardson(ew)
    mod_h, mod_w = 1 / rich_h[-1], 1 / rich_w[-1]
    if len(rich_h) >= 2:
        step = abs(1 / rich_h[-1] - 1 / rich_h[-2])
    else:
        step = abs(1 / eh[-1] - 1 / eh[-2])
    est_error = max(step, abs(mod_h * mod_w - 1))
    return ModulusResult(
        t=region.t,
        mod_h=mod_h,
        mod_w=mod_w,
        levels=levels,
        energies_h=eh,
        energies_w=ew,
        order_h=order_h,
        order_w=order_w,
        est_error=est_error,
        raw_h=[1 / e for e in eh],
        raw_w=[1 / e for e in ew],
    )


def thread_cap() -> int:
    """Worker count from SKINLAB_THREADS, defaulting to the CPU count."""
    env = os.environ.get("SKINLAB_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"SKINLAB_THREADS={env!r} is not an integer") from None
        return max(1, n)
    return os.cpu_count() or 1


def sweep(t_values: Sequence[float], base_resolution: int = 256, refinements: int = 3) -> list[ModulusResult]:
    """One independent solve per t, returned in input order."""
    regions = [ProfileRegion.at(t) for t in t_values]
    workers = min(thread_cap(), max(1, len(regions)))
    if workers == 1:
        return [solve_modulus(r, base_resolution, refinements) for r in regions]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda r: solve_modulus(r, base_resolution, refinements), regions))
