"""Walk along the representation path and print what changes.

For a handful of parameters this prints the trace checks, the bending angle
(closed form next to the cross-ratio reading), the two curve lengths and
the size of an orbit sample of the limit set.

    python demos/path_geometry.py
"""

import numpy as np

from skinlab import corebend, reppath
from skinlab.complexalg import trace_sq


def main() -> None:
    _, t0 = corebend.t0()
    print(f"parameter interval: ({t0:.10f}, 1]")
    print(f"{'t':>6} {'max|tr^2-4|':>12} {'theta':>10} {'theta (cr)':>10} {'ell_xi':>9} {'ell_eta':>9} {'orbit pts':>9}")
    for t in (0.39, 0.45, 0.5, 0.6, 0.8, 1.0):
        rep = reppath.rep_at(t)
        parab = max(abs(trace_sq(reppath.evaluate_word(rep, d)) - 4) for d in reppath.DELTAS)
        th = corebend.theta(t)
        th_cr = corebend.bending_angle_crossratio(t) if t < 1 else 0.0
        lx, le = corebend.lengths(t)
        n = len(reppath.limit_orbit(rep, 4))
        print(f"{t:6.2f} {parab:12.1e} {th:10.6f} {th_cr:10.6f} {lx:9.5f} {le:9.5f} {n:9d}")

    # eta pinches as t drops to t0
    print("\nnear the cusp, 2 + tr(eta) -> 0:")
    for eps in (1e-1, 1e-2, 1e-3, 1e-4):
        print(f"  t0 + {eps:.0e}: {corebend.trace_shift_eta(t0 + eps): .3e}")

    ok = all(all(reppath.symmetry_report(float(t)).values()) for t in np.linspace(0.05, 1, 20))
    print(f"\nsymmetry identities on 20 parameters: {'all hold' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
