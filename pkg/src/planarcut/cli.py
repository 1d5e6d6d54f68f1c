"""Command-line front end.

Exit codes: 0 ok, 1 check failure, 2 input error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time

import numpy as np

from . import generators as G
from .cfn import min_cut, shortest_cycle, strongly_connected
from .ddg import build_ddg, build_r_division, ddg_distance
from .embed import dual, dumps, load
from .errors import InputError, PlanarCutError, PreconditionError
from .oracle import MAX_ENUM, brute_min_cut, brute_shortest_cycle
from .paths import dijkstra

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3
BENCH_HEADER = ["kind", "n", "seed", "algo", "millis", "value"]
CHECK_LIMIT = 9


def _num(x: float):
    if not math.isfinite(x):
        return "inf"
    return int(x) if float(x).is_integer() else float(x)


def _emit(obj) -> None:
    print(json.dumps(obj))


def _millis(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


# ---------------------------------------------------------------- commands


def cmd_mincut(args) -> int:
    e = load(args.file)
    t0 = time.perf_counter()
    res = min_cut(e, contract=not args.no_contract)
    _emit({
        "value": _num(res.value),
        "cut_x": res.cut.x,
        "dual_cycle_darts": list(res.dual_cycle.darts),
        "millis": _millis(t0),
    })
    return EXIT_OK


def cmd_cycle(args) -> int:
    e = load(args.file)
    t0 = time.perf_counter()
    c = shortest_cycle(e, strict=args.strict, contract=not args.no_contract)
    _emit({
        "value": _num(c.length if c is not None else math.inf),
        "cycle_darts": list(c.darts) if c is not None else [],
        "millis": _millis(t0),
    })
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n < 2:
        raise InputError("n must be at least 2")
    lo, hi = args.weight_range
    if lo < 0 or hi < lo:
        raise InputError("weight range must satisfy 0 <= lo <= hi")
    e = G.generate(args.kind, args.n, G.default_seed(args.seed), (lo, hi), args.directed_prune)
    text = dumps(e) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def check_report(e) -> list[tuple[str, bool, str]]:
    """Validation and (for small graphs) oracle cross-checks."""
    rows = []
    rows.append(("euler", e.euler_ok(), f"V={e.n} E={e.num_edges} F={e.num_faces}"))
    w = e.weight
    rows.append(("weights", bool(np.all((w >= 0) | np.isinf(w))), "non-negative"))
    if not rows[0][1]:
        return rows
    sc = strongly_connected(e)
    rows.append(("strongly-connected", True, str(sc)))
    if e.n <= CHECK_LIMIT:
        c = shortest_cycle(e)
        b = brute_shortest_cycle(e)
        a1 = c.length if c is not None else math.inf
        b1 = b.length if b is not None else math.inf
        rows.append(("cycle-vs-oracle", a1 == b1, f"{_num(a1)} vs {_num(b1)}"))
        if sc and e.n >= 2:
            mc = min_cut(e).value
            bc = brute_min_cut(e).capacity
            rows.append(("mincut-vs-oracle", mc == bc, f"{_num(mc)} vs {_num(bc)}"))
            dc = brute_shortest_cycle(dual(e, absent_weight=0.0))
            dl = dc.length if dc is not None else math.inf
            rows.append(("duality", dl == bc, f"{_num(dl)} vs {_num(bc)}"))
    return rows


def cmd_check(args) -> int:
    e = load(args.file, validate=False)
    rows = check_report(e)
    ok = True
    for name, passed, info in rows:
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {name}: {info}")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_ddg_check(args) -> int:
    e = load(args.file)
    rd = build_r_division(e, args.r, args.c1, args.c2)
    d = build_ddg(e, rd)
    B = rd.boundary_vertices
    pairs = [(int(u), int(v)) for u in B for v in B]
    if args.pairs and len(pairs) > args.pairs:
        rng = np.random.default_rng(G.default_seed(args.seed))
        pairs = [pairs[i] for i in rng.choice(len(pairs), args.pairs, replace=False)]
    trees = {}
    bad = 0
    for u, v in pairs:
        if u not in trees:
            trees[u] = dijkstra(e, u).dist
        if ddg_distance(d, u, v) != trees[u][v]:
            bad += 1
    holes = max((p.holes for p in rd.pieces), default=0)
    print(f"pieces={len(rd.pieces)} boundary={B.size} max_piece={max(p.vertices.size for p in rd.pieces)} "
          f"max_boundary={max(p.boundary.size for p in rd.pieces)} max_holes={holes}")
    print(f"{'PASS' if bad == 0 else 'FAIL'} ddg-distance: {len(pairs) - bad}/{len(pairs)} pairs exact")
    return EXIT_OK if bad == 0 else EXIT_CHECK


def _instance_arg(kind: str, size: int) -> int:
    # grid kinds take a side length; sizes are vertex counts
    if kind in ("grid", "cylinder-grid"):
        return max(2, int(round(math.sqrt(size))))
    return size


def cmd_bench(args) -> int:
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(BENCH_HEADER)
    mismatch = 0
    for size in sorted(args.sizes):
        for seed in args.seeds:
            e = G.generate(args.kind, _instance_arg(args.kind, size), seed,
                           directed_prune=args.directed_prune)
            t0 = time.perf_counter()
            v = min_cut(e).value
            out.writerow([args.kind, e.n, seed, "cfn", _millis(t0), _num(v)])
            if e.n <= args.oracle_cap:
                t0 = time.perf_counter()
                b = brute_min_cut(e).capacity
                out.writerow([args.kind, e.n, seed, "oracle", _millis(t0), _num(b)])
                mismatch += v != b
            sys.stdout.flush()
    if mismatch:
        print(f"{mismatch} cfn/oracle mismatches", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planarcut", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mincut", help="minimum directed cut of a graph file")
    p.add_argument("file")
    p.add_argument("--no-contract", action="store_true", help="keep degree-two vertices")
    p.set_defaults(func=cmd_mincut)

    p = sub.add_parser("cycle", help="shortest directed cycle of a graph file")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="require strong connectivity")
    p.add_argument("--no-contract", action="store_true", help="keep degree-two vertices")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("gen", help="write a seeded instance as JSON")
    p.add_argument("kind", choices=G.KINDS)
    p.add_argument("n", type=int, help="grid side, or vertex count for random graphs")
    p.add_argument("--seed", type=int, default=None, help="defaults to $PLANAR_SEED or 0")
    p.add_argument("--weight-range", type=int, nargs=2, default=(1, 1000), metavar=("LO", "HI"))
    p.add_argument("--directed-prune", action="store_true",
                   help="drop reverse arcs while keeping strong connectivity")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="validate a graph file and cross-check small ones")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ddg-check", help="compare DDG distances against Dijkstra")
    p.add_argument("file")
    p.add_argument("--r", type=int, default=16)
    p.add_argument("--c1", type=float, default=40.0)
    p.add_argument("--c2", type=float, default=20.0)
    p.add_argument("--pairs", type=int, default=0, help="sample this many pairs (0 = all)")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_ddg_check)

    p = sub.add_parser("bench", help="time min cut on generated instances (CSV)")
    p.add_argument("kind", choices=G.KINDS)
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 1024],
                   help="target vertex counts")
    p.add_argument("--seeds", type=int, nargs="+", default=[0])
    p.add_argument("--oracle-cap", type=int, default=16,
                   help=f"run the enumeration oracle up to this many vertices (max {MAX_ENUM})")
    p.add_argument("--directed-prune", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PlanarCutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
