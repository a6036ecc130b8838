"""Command line front end.

Exit codes: 0 success, 1 validation or domain error, 2 parse or I/O error.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .errors import LorentzSpinError, ParseError
from .figures import emit_csv, run_figure
from .kinematics import Boost, MomentumSpec, wigner_halpern
from .scenario import load_scenario
from .spinmap import (
    apply_map,
    build_map,
    choi_cp_oracle,
    choi_min_eigenvalue,
    compat_check,
    domain_margin,
    is_cp_criterion,
    mean_spin,
    transform_density,
    transform_state,
)


def _vec(v) -> str:
    return " ".join(f"{x + 0.0:.12g}" for x in v)  # + 0.0 drops negative zero


def _unit(v):
    v = np.array(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise LorentzSpinError("direction must be nonzero")
    return v / n


def _print_rotation(out, name, r):
    out.write(f"{name}.axis = {_vec(r.axis)}\n")
    out.write(f"{name}.angle = {r.angle:.12g}\n")
    out.write(f"{name}.angle_deg = {math.degrees(r.angle):.12g}\n")


def _print_matrix(out, name, m):
    for i, row in enumerate(m):
        cells = " ".join(f"{z.real:+.12f}{z.imag:+.12f}j" for z in row)
        out.write(f"{name}[{i}] = {cells}\n")


def cmd_wigner(args, out):
    direction = _unit(args.boost_dir)
    if args.velocity is not None:
        b = Boost.from_velocity(args.velocity, direction)
    else:
        b = Boost(args.rapidity, direction)
    spec = MomentumSpec(args.mom_rapidity, _unit(args.mom_dir))
    r, d = wigner_halpern(b, spec)
    _print_rotation(out, "wigner", r)
    _print_matrix(out, "D", d)


def cmd_map(args, out):
    sc = load_scenario(args.scenario)
    m = build_map(sc.boost, sc.state)
    _print_rotation(out, "w1", m.w1)
    _print_rotation(out, "w2", m.w2)
    out.write(f"a = {_vec(m.a)}\n")
    out.write(f"degenerate = {str(m.degenerate).lower()}\n")
    if not m.degenerate:
        out.write(f"z = {_vec(m.z_axis)}\n")
        out.write(f"z_prime = {_vec(m.z_prime)}\n")
        out.write(f"a_perp = {_vec(m.a_perp)}\n")
    out.write(f"mean_spin_out = {_vec(apply_map(m, mean_spin(sc.state)))}\n")


def cmd_transform(args, out):
    sc = load_scenario(args.scenario)
    t = transform_state(sc.boost, sc.state)
    mean = t.r1 + t.r2
    out.write(f"r1 = {_vec(t.r1)}\n")
    out.write(f"r2 = {_vec(t.r2)}\n")
    out.write(f"mean_spin = {_vec(mean)}\n")
    out.write(f"magnitude = {np.linalg.norm(mean):.12g}\n")
    for name, p in (("p1", t.p1), ("p2", t.p2)):
        out.write(f"{name}.rapidity = {p.rapidity:.12g}\n")
        out.write(f"{name}.direction = {_vec(p.direction)}\n")
    _print_matrix(out, "rho", transform_density(sc.boost, sc.state))


def cmd_domain(args, out):
    sc = load_scenario(args.scenario)
    m = build_map(sc.boost, sc.state)
    sv = np.array(args.sv, dtype=float) if args.sv is not None else mean_spin(sc.state)
    ok = compat_check(m, sv)
    out.write(f"sv = {_vec(sv)}\n")
    out.write(f"compatible = {str(ok).lower()}\n")
    if not m.degenerate:
        out.write(f"margin = {domain_margin(m, sv):.12g}\n")


def cmd_cp(args, out):
    sc = load_scenario(args.scenario)
    m = build_map(sc.boost, sc.state)
    out.write(f"criterion = {str(is_cp_criterion(m)).lower()}\n")
    out.write(f"choi = {str(choi_cp_oracle(m)).lower()}\n")
    out.write(f"choi_min_eigenvalue = {choi_min_eigenvalue(m):.12g}\n")


def cmd_figure(args, out):
    sc = load_scenario(args.scenario)
    table = run_figure(args.which, sc)
    if args.out in (None, "-"):
        emit_csv(table, out)
    else:
        with open(args.out, "wb") as fh:
            emit_csv(table, fh)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lorentzspin", description="Wigner rotations and spin maps for two momentum values")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wigner", help="Wigner rotation of one momentum under a pure boost")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rapidity", type=float)
    g.add_argument("--velocity", type=float)
    p.add_argument("--boost-dir", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument("--mom-rapidity", type=float, required=True)
    p.add_argument("--mom-dir", type=float, nargs=3, default=[1.0, 0.0, 0.0], metavar=("X", "Y", "Z"))
    p.set_defaults(func=cmd_wigner)

    for name, func, text in (
        ("map", cmd_map, "rotations and fixed vector of the induced spin map"),
        ("transform", cmd_transform, "boost the scenario state"),
        ("domain", cmd_domain, "compatibility-domain membership"),
        ("cp", cmd_cp, "complete positivity by criterion and Choi matrix"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--scenario", required=True)
        if name == "domain":
            p.add_argument("--sv", type=float, nargs=3, metavar=("X", "Y", "Z"))
        p.set_defaults(func=func)

    p = sub.add_parser("figure", help="curve data for figure 1, 2 or 3 as CSV")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_figure)
    return parser


def dispatch(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (LorentzSpinError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(dispatch())
