"""Conformal moduli of the regions R_t, and the dip in the middle.

Solves the two Dirichlet problems on a graded mesh for a small t-grid,
prints mod_h with its error estimate and shows that t = 1/2 sits above
both ends.  The last column, 4 mod_w, is the extremal length of the
curve crossing the graph sides.

    python demos/moduli.py            # under ten seconds
    SKINLAB_THREADS=4 python demos/moduli.py
"""

import numpy as np

from skinlab import modnum
from skinlab.profile import alpha, region_contains


def main() -> None:
    ts = [0.39, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7, 0.8, 0.9, 1.0]
    results = modnum.sweep(ts, 128, 2)
    print(f"{'t':>5} {'mod_h':>9} {'est.err':>8} {'order':>6} {'2 alpha':>8} {'4 mod_w':>8}")
    for r in results:
        print(f"{r.t:5.2f} {r.mod_h:9.5f} {r.est_error:8.1e} {r.order_h:6.2f} {2 * alpha(r.t):8.4f} {4 * r.mod_w:8.4f}")

    peak = max(results, key=lambda r: r.mod_h)
    print(f"\nlargest mod_h on this grid at t = {peak.t}")
    for inner in (1.0, 0.4):
        ok, margin = region_contains(0.5, inner)
        print(f"R_{inner:g} inside R_1/2: {ok} (margin {margin:.4f})")
    print(f"mod_h(1) vs sqrt(3): {results[-1].mod_h:.6f} vs {np.sqrt(3):.6f}")


if __name__ == "__main__":
    main()
