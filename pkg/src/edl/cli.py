"""Command-line front end: ``edl <subcommand> ...``.

Rationals are passed as ``a/b``; floats are rejected for ``p``. Exact values
are printed first and float approximations second.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from edl import config
from edl import crg as C
from edl import edf as E
from edl import enumeration as EN
from edl import verify as V
from edl.embedding import embeds, in_family
from edl.io import fmt_rational, load_crg, load_family, load_graph, parse_rational


@dataclass
class RunConfig:
    p: Optional[Fraction] = None
    grid: int = 64
    max_k: int = 5
    tol: float = 1e-9
    inputs: list = field(default_factory=list)
    out: str = "csv"
    workers: int = 1

    def __post_init__(self):
        if self.p is not None and not 0 < self.p < 1:
            raise ValueError(f"--p must lie strictly between 0 and 1, got {self.p}")
        if self.max_k > config.max_k_cap():
            raise config.CapExceeded(f"--max-k {self.max_k} exceeds the cap {config.max_k_cap()}")
        if self.tol <= 0:
            raise ValueError("--tol must be positive")
        if self.grid < 2:
            raise ValueError("--grid must be at least 2")
        if self.out not in ("csv", "json"):
            raise ValueError("--out must be csv or json")

    @property
    def grid_points(self):
        return E.dyadic_grid(self.grid)


def default_max_k(args) -> int:
    if args.command == "verify-split":
        return args.alpha + args.omega - 1
    return 5


def _config(args) -> RunConfig:
    return RunConfig(
        p=args.p,
        grid=args.grid,
        max_k=args.max_k if args.max_k is not None else default_max_k(args),
        tol=args.tol,
        inputs=[args.input] if args.input else [],
        out=args.out,
        workers=args.workers,
    )


def _fx(x):
    return f"{fmt_rational(x)} (~{float(x):.10g})"


def _need_p(cfg):
    if cfg.p is None:
        raise ValueError("--p is required")
    return cfg.p


def _family(args):
    spec = args.input or args.forb
    if not spec:
        raise ValueError("give the forbidden family with --input FILE or --forb SPEC")
    return load_family(spec)


# --- subcommands -------------------------------------------------------------


def cmd_gval(args, cfg, out):
    K = load_crg(args.crg)
    p = _need_p(cfg)
    res = C.g_value(K, p)
    print(f"crg        {K}", file=out)
    print(f"p          {fmt_rational(p)}", file=out)
    print(f"g          {_fx(res.g)}", file=out)
    print(f"f          {_fx(C.f_value(K, p))}", file=out)
    print(f"x          [{', '.join(fmt_rational(t) for t in res.x)}]", file=out)
    print(f"support    {list(res.support)}", file=out)
    for Kc in C.components(K):
        print(f"component  {Kc}  g={fmt_rational(C.g(Kc, p))}", file=out)
    return 0


def cmd_fval(args, cfg, out):
    K = load_crg(args.crg)
    print(f"f          {_fx(C.f_value(K, _need_p(cfg)))}", file=out)
    return 0


def cmd_embed(args, cfg, out):
    H = load_graph(args.graph)
    K = load_crg(args.crg)
    w = embeds(H, K)
    if w is None:
        print(f"NOT EMBEDS  {H.to_text()} -/-> {K}", file=out)
    else:
        print(f"EMBEDS  {H.to_text()} -> {K}", file=out)
        for v, pre in enumerate(w.preimages(K.k)):
            print(f"  {v} ({K.vcolors[v]}): {list(pre)}", file=out)
    return 0


def cmd_family_check(args, cfg, out):
    F = _family(args)
    K = load_crg(args.crg)
    member = in_family(K, F)
    print(("IN FAMILY" if member else "NOT IN FAMILY") + f"  {K}", file=out)
    return 0


def cmd_enum(args, cfg, out):
    F = _family(args) if (args.input or args.forb) else None
    crgs = EN.family_members(F, cfg.max_k, cfg.p) if F else list(EN.enumerate_crgs(cfg.max_k, cfg.p))
    if cfg.out == "json":
        json.dump([K.to_text() for K in crgs], out, indent=1)
        print(file=out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "crg"])
        for K in crgs:
            w.writerow([K.k, K.to_text()])
    return 0


def cmd_min_g(args, cfg, out):
    F = _family(args)
    p = _need_p(cfg)
    value, K = EN.min_g_over_family(F, cfg.max_k, p, workers=cfg.workers)
    print(f"min g      {_fx(value)}  (upper bound on ed at p = {fmt_rational(p)}, k <= {cfg.max_k})", file=out)
    print(f"minimiser  {K}", file=out)
    return 0


def cmd_pcore(args, cfg, out):
    K = load_crg(args.crg)
    p = _need_p(cfg)
    gK = C.g(K, p)
    core = C.is_p_core(K, p, gK)
    print(("P-CORE" if core else "NOT P-CORE") + f"  {K} at p = {fmt_rational(p)}, g = {fmt_rational(gK)}",
          file=out)
    return 0


def _write_table(rows, cfg, out):
    header = ["p_exact", "p_float", "value_exact", "value_float", "argmin_crg"]
    if cfg.out == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=1)
        print(file=out)
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def cmd_edf(args, cfg, out):
    F = _family(args)
    grid = cfg.grid_points
    minima = EN.family_grid_minima(F, cfg.max_k, grid, restrict=not args.all, workers=cfg.workers)
    rows = []
    for p, m in zip(grid, minima):
        if m is None:
            rows.append([fmt_rational(p), f"{float(p):.12g}", "", "", ""])
        else:
            rows.append([fmt_rational(p), f"{float(p):.12g}", fmt_rational(m[0]), f"{float(m[0]):.12g}", m[1]])
    _write_table(rows, cfg, out)
    return 0


def parse_envelope(spec: str) -> E.Envelope:
    """``h9``, ``c6star``, ``split:ALPHA,OMEGA`` or ``pieces:a,b,c,d;a,b,c,d;...``."""
    s = spec.strip().lower()
    if s == "h9":
        return E.h9_edf()
    if s in ("c6star", "c6*"):
        return E.c6star_edf()
    if s.startswith("split:"):
        alpha, omega = (int(t) for t in s[6:].split(","))
        return E.split_edf(alpha, omega)
    if s.startswith("pieces:"):
        pieces = []
        for chunk in filter(None, s[7:].split(";")):
            coeffs = [parse_rational(t) for t in chunk.split(",")]
            if len(coeffs) != 4:
                raise ValueError(f"a piece needs four coefficients a,b,c,d: {chunk!r}")
            pieces.append(E.LinFrac(*coeffs))
        return E.Envelope(tuple(pieces))
    raise ValueError(f"unknown envelope {spec!r}")


def cmd_maxpoint(args, cfg, out):
    env = parse_envelope(args.envelope)
    mp = E.max_point(env, cfg.tol)
    row = {
        "envelope": str(env),
        "p_exact": str(mp.p_exact) if mp.exact else "",
        "p_float": f"{mp.p_star:.12g}",
        "d_exact": str(mp.d_exact) if mp.exact else "",
        "d_float": f"{mp.d_star:.12g}",
        "exact": mp.exact,
        "flat": mp.flat,
    }
    if cfg.out == "json":
        json.dump(row, out, indent=1, ensure_ascii=False)
        print(file=out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(row))
        w.writerow(list(row.values()))
    return 0


def _report(checks, out):
    for c in checks:
        print(c.line(), file=out)
    ok = V.all_passed(checks)
    print("PASS" if ok else "FAIL", file=out)
    return 0 if ok else 1


def cmd_verify_split(args, cfg, out):
    checks = V.verify_split(args.alpha, args.omega, cfg.max_k, cfg.grid_points, workers=cfg.workers)
    print(f"envelope {E.split_edf(args.alpha, args.omega)}", file=out)
    return _report(checks, out)


def cmd_verify_h9(args, cfg, out):
    grid = [parse_rational(t) for t in args.points.split(",")] if args.points else cfg.grid_points
    checks = V.verify_h9(cfg.max_k, grid, cfg.tol, workers=cfg.workers)
    if args.points:
        env = E.h9_edf()
        for p in grid:
            print(f"value at {fmt_rational(p)}: {fmt_rational(env.value(p))}", file=out)
    return _report(checks, out)


# --- parser ----------------------------------------------------------------


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_rational_arg, help="exact rational a/b")
    common.add_argument("--grid", type=int, default=64, help="use the dyadic grid i/N, i = 1..N-1")
    common.add_argument("--max-k", type=int, help="largest CRG size to enumerate (default 5; alpha+omega-1 for verify-split)")
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", choices=("csv", "json"), default="csv")
    common.add_argument("--input", help="JSON file with a graph list (forbidden family)")
    common.add_argument("--forb", help="forbidden graphs as specs joined by '|', e.g. 'H9' or '3:0-1,1-2,0-2'")

    parser = argparse.ArgumentParser(prog="edl", description="Edit distance functions via colored regularity graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, helptext):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=func)
        return sp

    add("gval", cmd_gval, "g_K(p) with optimal weights").add_argument("crg")
    add("fval", cmd_fval, "f_K(p)").add_argument("crg")
    sp = add("embed", cmd_embed, "decide H -> K")
    sp.add_argument("graph", help="JSON file, 'n:u-v,...', or preset name such as H9")
    sp.add_argument("crg")
    add("family-check", cmd_family_check, "is K in K(F)?").add_argument("crg")
    add("enum", cmd_enum, "list CRGs up to isomorphism")
    add("min-g", cmd_min_g, "min g over K(F) at p")
    add("pcore", cmd_pcore, "is K a p-core?").add_argument("crg")
    sp = add("edf", cmd_edf, "envelope of g over K(F) on a grid")
    sp.add_argument("--all", action="store_true", help="visit every CRG instead of only p-core-shaped ones")
    add("maxpoint", cmd_maxpoint, "maximum of an envelope").add_argument(
        "envelope", help="h9, c6star, split:ALPHA,OMEGA or pieces:a,b,c,d;...")
    sp = add("verify-split", cmd_verify_split, "check the split-graph formula")
    sp.add_argument("--alpha", type=int, required=True)
    sp.add_argument("--omega", type=int, required=True)
    sp = add("verify-h9", cmd_verify_h9, "check the H9 formula")
    sp.add_argument("--points", help="comma-separated rationals instead of the dyadic grid")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(args, cfg, out)
    except (ValueError, config.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
