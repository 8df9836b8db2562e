"""Command-line front end: ``skinlab verify | sweep | profile | modulus | limitset``.

Exit status is 0 on success, 1 when a verification or computation fails and
2 for usage errors (bad flags, parameters outside the domain).
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import corebend, modnum, profile, reppath
from .exactcert import CHECK_IDS, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SWEEP_COLUMNS = ("t", "theta", "L", "alpha", "ell_xi", "ell_eta", "mod_h", "mod_w", "est_error", "grid_levels")
SWEEP_UNITS = (
    "# units: theta radians; L, ell_xi, ell_eta hyperbolic length; alpha, mod_h, mod_w, est_error dimensionless; "
    "grid_levels = x-cells per level, ';'-separated"
)
SYMMETRY_TOL = 1e-4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    t: float | None = None
    t_range: tuple[float, float, int] | None = None
    resolution: dict = field(default_factory=dict)
    out: Path | None = None
    fmt: str = "csv"
    timestamp: bool = True


def fmt_real(v) -> str:
    """Shortest round-trip text for a float; empty for missing values."""
    if v is None:
        return ""
    return repr(float(v))


def _header(config: RunConfig) -> list[str]:
    if not config.timestamp:
        return []
    now = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()
    return [f"# generated {now}"]


def _check_t(t: float) -> float:
    _, lo = corebend.t0()
    if not (lo < t <= 1) or math.isnan(t):
        raise UsageError(f"t={t!r} is outside the parameter interval (t0, 1] with t0 = {lo!r}")
    return t


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def _csv_text(comments: list[str], header, rows) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(line + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- verify -------------------------------------------------------------------


def consistency_suites() -> dict[str, bool]:
    """Floating-point cross-checks run alongside the certificates."""
    t_lo = corebend.t0()[1]
    grid = np.linspace(0.01, 1.0, 100)
    symmetry = all(all(reppath.symmetry_report(float(t)).values()) for t in grid)
    theta_ok = True
    for t in np.linspace(t_lo + 0.01, 0.99, 100):
        try:
            corebend.bending_angle_crossratio(float(t))
        except ArithmeticError:
            theta_ok = False
            break
    contain = profile.region_contains(0.5, 1.0)[0] and profile.region_contains(0.5, 0.4)[0]
    return {"symmetry": symmetry, "theta_crossratio": theta_ok, "containment": contain}


def cmd_verify(args, config: RunConfig) -> int:
    only = args.only or None
    negate = [args.inject_fault] if args.inject_fault else []
    try:
        report = verify_all(only=only, negate=negate)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    failures = report.failures()
    for e in report.entries:
        print(f"{e.id:16s} {e.verdict:24s} bits={e.precision_bits:<5d} {e.elapsed_ms:.1f} ms  {e.statement}")
    if only is None:
        for name, ok in consistency_suites().items():
            print(f"{name:16s} {'passed' if ok else 'FAILED'}")
            if not ok:
                failures.append(name)
    if args.json:
        _write_text(Path(args.json), report.to_json() + "\n")
    if failures:
        print("failed: " + ", ".join(failures), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- sweep --------------------------------------------------------------------


def sweep_rows(t_values, results=None) -> list[list[str]]:
    rows = []
    for i, t in enumerate(t_values):
        d = corebend.bend_data(t)
        row = [fmt_real(t), fmt_real(d.theta), fmt_real(d.biglen), fmt_real(d.alpha), fmt_real(d.ell_xi), fmt_real(d.ell_eta)]
        if results is not None:
            r = results[i]
            row += [fmt_real(r.mod_h), fmt_real(r.mod_w), fmt_real(r.est_error), ";".join(str(n) for n in r.levels)]
        else:
            row += ["", "", "", ""]
        rows.append(row)
    return rows


def cmd_sweep(args, config: RunConfig) -> int:
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if args.t_min > args.t_max:
        raise UsageError("--t-min must not exceed --t-max")
    _check_t(args.t_min)
    _check_t(args.t_max)
    ts = [float(t) for t in np.linspace(args.t_min, args.t_max, args.steps)]
    results = None
    if args.modulus:
        try:
            modnum.levels_for(args.grid, args.refine)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        results = modnum.sweep(ts, args.grid, args.refine)
    comments = _header(config) + [SWEEP_UNITS, f"# modulus convention: {modnum.ModulusResult.convention}"]
    _write_text(Path(args.out), _csv_text(comments, SWEEP_COLUMNS, sweep_rows(ts, results)))
    return EXIT_OK


# -- profile ------------------------------------------------------------------


def cmd_profile(args, config: RunConfig) -> int:
    t = _check_t(args.t)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    x = np.linspace(0.0, 1.0, args.samples)
    upper = profile.profile_f(x, t)
    lower = -profile.profile_f(1 - x, t)
    rows = [[fmt_real(a), fmt_real(b), fmt_real(c)] for a, b, c in zip(x, upper, lower)]
    comments = _header(config) + [f"# t = {t!r}; F_upper = F(x, t), F_lower = -F(1 - x, t)"]
    _write_text(Path(args.out), _csv_text(comments, ("x", "F_upper", "F_lower"), rows))
    return EXIT_OK


# -- modulus ------------------------------------------------------------------


def cmd_modulus(args, config: RunConfig) -> int:
    t = _check_t(args.t)
    try:
        modnum.levels_for(args.grid, args.refine)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = modnum.solve_modulus(profile.ProfileRegion.at(t), args.grid, args.refine)
    if args.json:
        print(json.dumps(res.as_dict(), indent=2))
    else:
        print(f"t          {t!r}")
        print(f"mod_h      {res.mod_h!r}")
        print(f"mod_w      {res.mod_w!r}")
        print(f"est_error  {res.est_error!r}")
        print(f"order      h {res.order_h:.3f}  w {res.order_w:.3f}")
        print(f"levels     {res.levels}")
        print(f"# {res.convention}")
    return EXIT_OK


# -- limitset -----------------------------------------------------------------


def cmd_limitset(args, config: RunConfig) -> int:
    t = _check_t(args.t)
    if not 1 <= args.depth <= 16:
        raise UsageError("--depth must lie in [1, 16]")
    pts = reppath.limit_orbit(reppath.rep_at(t), args.depth)
    finite = pts[~np.isinf(pts)]
    n_inf = len(pts) - len(finite)
    comments = _header(config) + [f"# t = {t!r}; depth = {args.depth}; points at infinity omitted: {n_inf}"]
    rows = [[fmt_real(z.real), fmt_real(z.imag)] for z in finite]
    _write_text(Path(args.out), _csv_text(comments, ("re", "im"), rows))
    if args.check_symmetry:
        defect = reppath.orbit_symmetry_defect(t, args.depth)
        ok = defect <= SYMMETRY_TOL
        print(f"symmetry defect {defect!r} ({'ok' if ok else 'FAILED'} at {SYMMETRY_TOL})")
        if not ok:
            print("failed: symmetry", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skinlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--no-timestamp", action="store_true", help="omit the '# generated' header line")

    v = sub.add_parser("verify", help="certify the inequalities and run consistency suites")
    v.add_argument("--only", action="append", choices=CHECK_IDS, metavar="ID", help="run only this certificate (repeatable)")
    v.add_argument("--json", metavar="PATH", help="write the certificate report as JSON")
    v.add_argument("--inject-fault", choices=CHECK_IDS, help=argparse.SUPPRESS)
    common(v)

    s = sub.add_parser("sweep", help="tabulate path quantities over a t-range")
    s.add_argument("--t-min", type=float, required=True)
    s.add_argument("--t-max", type=float, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--modulus", action="store_true", help="also compute conformal moduli (slow)")
    s.add_argument("--grid", type=int, default=128, help="finest grid (x-cells)")
    s.add_argument("--refine", type=int, default=2, help="number of coarser levels")
    s.add_argument("--out", required=True, metavar="PATH")
    common(s)

    pr = sub.add_parser("profile", help="sample the graphs bounding R_t")
    pr.add_argument("--t", type=float, required=True)
    pr.add_argument("--samples", type=int, required=True)
    pr.add_argument("--out", required=True, metavar="PATH")
    common(pr)

    m = sub.add_parser("modulus", help="conformal modulus of R_t")
    m.add_argument("--t", type=float, required=True)
    m.add_argument("--grid", type=int, default=256, help="finest grid (x-cells)")
    m.add_argument("--refine", type=int, default=3, help="number of coarser levels")
    m.add_argument("--json", action="store_true", help="print the result as JSON")
    common(m)

    ls = sub.add_parser("limitset", help="orbit sample of the limit set")
    ls.add_argument("--t", type=float, required=True)
    ls.add_argument("--depth", type=int, required=True)
    ls.add_argument("--check-symmetry", action="store_true")
    ls.add_argument("--out", required=True, metavar="PATH")
    common(ls)
    return p


HANDLERS = {
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "profile": cmd_profile,
    "modulus": cmd_modulus,
    "limitset": cmd_limitset,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    config = RunConfig(
        subcommand=args.command,
        t=getattr(args, "t", None),
        t_range=(args.t_min, args.t_max, args.steps) if args.command == "sweep" else None,
        resolution={k: getattr(args, k) for k in ("grid", "refine", "samples", "depth") if hasattr(args, k)},
        out=Path(args.out) if getattr(args, "out", None) else None,
        fmt="json" if getattr(args, "json", None) else "csv",
        timestamp=not args.no_timestamp,
    )
    try:
        return HANDLERS[args.command](args, config)
    except UsageError as exc:
        print(f"skinlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except modnum.ModulusError as exc:
        print(f"skinlab {args.command}: modulus failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
