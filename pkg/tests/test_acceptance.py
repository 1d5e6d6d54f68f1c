"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION <k> PASS|FAIL`` line; under pytest
the lines are repeated in the terminal summary.  Run this file directly
(``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import math
import statistics
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

from planarcut import dual, triangulate_infinite
from planarcut import generators as G
from planarcut.cfn import Trace, min_cut, shortest_cycle
from planarcut.ddg import build_ddg, build_r_division, ddg_distance
from planarcut.oracle import audit_cycle, brute_min_cut, brute_shortest_cycle
from planarcut.paths import dijkstra, shortest_path
from planarcut.reif import ReifAudit, brute_crossing_once, shortest_cycle_crossing_once
from planarcut.separator import balance_limit, shortest_path_separator

RESULTS = {}


def report(k, ok, detail):
    line = f"CRITERION {k} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[k] = line
    print(line, flush=True)
    return ok


# ---------------------------------------------------------------- instances


def small_instances():
    out = []
    for seed in range(500):
        n = 4 + seed % 6
        out.append(G.random_planar(n, seed, (1, 20), directed_prune=seed % 2 == 1))
    return out


@lru_cache(maxsize=None)
def grid_runs():
    """Criterion-2 instances with the cycle, trace and oracle length."""
    runs = []
    for seed in range(300):
        side = 5 + seed % 8
        e = G.grid(side, seed, (1, 100))
        tr = Trace()
        c = shortest_cycle(e, trace=tr)
        runs.append((seed, e, c, tr, brute_shortest_cycle(e)))
    return runs


@lru_cache(maxsize=None)
def reif_runs():
    runs = []
    seed = 0
    while len(runs) < 200:
        rng = np.random.default_rng(seed)
        side = int(rng.integers(4, 13))
        e = G.grid(side, seed, (1, 64))
        s, t = (int(x) for x in rng.choice(e.n, 2, replace=False))
        p = shortest_path(e, s, t)
        audit = ReifAudit()
        a = shortest_cycle_crossing_once(e, p, audit=audit, base_work=0)
        b = brute_crossing_once(e, p)
        runs.append((seed, e, p, a, b, audit))
        seed += 1
    return runs


def contiguous(e, cycle, path):
    if not path:
        return True
    pv = [int(e.tail[d]) for d in path] + [int(e.head[path[-1]])]
    cv = {int(e.tail[d]) for d in cycle}
    hit = [i for i, v in enumerate(pv) if v in cv]
    return not hit or hit[-1] - hit[0] + 1 == len(hit)


# ---------------------------------------------------------------- criteria


def test_criterion_1_min_cut_oracle():
    t0 = time.perf_counter()
    bad = []
    for i, e in enumerate(small_instances()):
        if min_cut(e).value != brute_min_cut(e).capacity:
            bad.append(i)
    secs = time.perf_counter() - t0
    ok = not bad and secs < 60
    assert report(1, ok, f"500 instances, {len(bad)} mismatches, {secs:.1f} s (limit 60 s)")


def test_criterion_2_shortest_cycle_oracle():
    bad = [seed for seed, e, c, _, b in grid_runs() if c.length != b.length]
    assert report(2, not bad, f"300 grids 5x5..12x12, {len(bad)} mismatches")


def test_criterion_3_duality():
    bad = 0
    for e in small_instances():
        if e.n > 9:
            continue
        c = brute_shortest_cycle(dual(e, absent_weight=0.0))
        if brute_min_cut(e).capacity != (c.length if c else math.inf):
            bad += 1
    assert report(3, bad == 0, f"500 instances, {bad} mismatches")


def test_criterion_4_separator_balance():
    worst = 0.0
    bad = 0
    for seed in range(100):
        side = 3 + seed % 30
        e = triangulate_infinite(G.grid(side, seed))
        s = shortest_path_separator(e, seed % e.n)
        big = max(s.inside_faces, s.outside_faces)
        bad += big > balance_limit(e.num_faces)
        worst = max(worst, big / e.num_faces)
    assert report(4, bad == 0, f"100 grids up to 32x32, {bad} unbalanced, worst side {worst:.3f} of F")


def test_criterion_5_reif_oracle():
    bad = 0
    for seed, e, p, a, b, _ in reif_runs():
        if a.length != b.length:
            bad += 1
            continue
        if a.cycle is not None:
            rep = audit_cycle(e, a.cycle.darts, p.darts, a.length)
            bad += not rep.ok
    found = sum(a.cycle is not None for *_, a, b, _ in reif_runs())
    assert report(5, bad == 0, f"200 incisions ({found} with a crossing cycle), {bad} failures")


def test_criterion_6_side_restricted_distances():
    checks = sum(r[-1].checks for r in reif_runs())
    viol = sum(len(r[-1].violations) for r in reif_runs())
    assert report(6, viol == 0 and checks > 0, f"{checks} side-restricted distances, {viol} violations")


def test_criterion_7_single_subpath():
    checked = bad = 0
    for seed, e, c, tr, _ in grid_runs():
        cs = set(c.darts)
        for p, q, cover in tr.nodes:
            if not cs <= cover:
                continue
            for path in (p, q):
                checked += 1
                bad += not contiguous(e, c.darts, path)
    assert report(7, bad == 0 and checked > 0, f"{checked} separator paths, {bad} split intersections")


def test_criterion_8_ddg():
    e = G.grid(16, 0)
    bad = pairs = 0
    issues = []
    for r in (16, 64):
        rd = build_r_division(e, r)
        issues += rd.violations(e.n)
        d = build_ddg(e, rd)
        B = rd.boundary_vertices
        for u in B:
            dist = dijkstra(e, int(u)).dist
            for v in B:
                pairs += 1
                bad += ddg_distance(d, int(u), int(v)) != dist[v]
    ok = bad == 0 and not issues
    assert report(8, ok, f"{pairs} boundary pairs, {bad} mismatches, {len(issues)} bound violations")


def test_criterion_9_contraction_neutral():
    bad = 0
    for seed, e, c, _, _ in grid_runs()[:100]:
        if shortest_cycle(e, contract=False).length != c.length:
            bad += 1
    assert report(9, bad == 0, f"100 grids, {bad} differences")


@pytest.mark.slow
def test_criterion_10_scaling():
    min_cut(G.grid(16, 0))  # compile
    med = {}
    for k in (12, 14, 16, 18):
        side = 1 << (k // 2)
        e = G.grid(side, 0)
        ts = []
        for _ in range(5):
            t0 = time.perf_counter()
            min_cut(e)
            ts.append(time.perf_counter() - t0)
        med[k] = statistics.median(ts)
    ratios = [med[b] / med[a] for a, b in ((12, 14), (14, 16), (16, 18))]
    ok = max(ratios) <= 5.5 and med[18] < 120
    times = ", ".join(f"2^{k}: {v:.2f} s" for k, v in med.items())
    assert report(10, ok, f"{times}; ratios {', '.join(f'{r:.2f}' for r in ratios)} (limit 5.5)")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    tests.sort(key=lambda f: int(f.__name__.split("_")[2]))
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
