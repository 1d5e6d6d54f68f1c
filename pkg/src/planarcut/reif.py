"""Shortest directed cycle crossing a path exactly once.

The graph is slit open along the path ``P = p_0 .. p_k``; a cycle crossing
``P`` once from right to left at ``p_i`` is a path from the left clone
``p_i^0`` to the right clone ``p_i^1`` in the slit graph (and the other way
round for left-to-right).  The divide-and-conquer solves the middle index,
cuts the slit graph along the path it found and hands each half the indices
on its side.

Absent arcs get a large finite length ``BIG`` while dividing, so a splitting
path always exists when the clones are connected; only answers shorter than
``BIG`` count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import _kernels as K
from .embed import Embedding
from .errors import NonSimplePath
from .paths import DirectedCycle, DirectedPath, make_cycle
from .surgery import default_corners, incise, simplify

INF = math.inf
RIGHT_TO_LEFT = "RightToLeft"
LEFT_TO_RIGHT = "LeftToRight"
ORIENTATIONS = (RIGHT_TO_LEFT, LEFT_TO_RIGHT)

# subproblems cheaper than this many dart scans are solved index by index
BASE_WORK = 60000


@dataclass
class ReifAnswer:
    """Best crossing-once cycle; ``cycle`` is ``None`` when ``length`` is inf."""

    cycle: DirectedCycle | None = None
    index: int | None = None
    orientation: str | None = None
    length: float = INF

    def key(self):
        o = ORIENTATIONS.index(self.orientation) if self.orientation else 2
        return (self.length, o, self.index if self.index is not None else -1)


@dataclass
class ReifAudit:
    """Per-subproblem record of restricted against unrestricted distances."""

    checks: int = 0
    violations: list = field(default_factory=list)
    conflicts: int = 0


@dataclass
class _Slit:
    root: Embedding
    g: Embedding
    big: float
    tag: np.ndarray
    outer: np.ndarray
    copy0: list
    copy1: list


def _darts(p) -> np.ndarray:
    if isinstance(p, DirectedPath):
        p = p.darts
    return np.asarray([int(d) for d in p], dtype=np.int64)


def _slit(e: Embedding, p: np.ndarray) -> _Slit | None:
    x0, xk = default_corners(e, p)
    s_face, t_face = int(e.face[x0]), int(e.face[xk])
    if s_face == t_face:
        return None
    res = incise(e, p)
    g = res.incised
    big = e.total_weight() + 1.0
    w = np.where(np.isfinite(g.weight), g.weight, big)
    gb = g.reweighted(w)
    ef = e.face[g.dart_map]
    tag = np.full(g.m, np.nan)
    tag[ef == s_face] = -INF
    tag[ef == t_face] = INF
    for i in range(len(p)):
        for eid in (res.left_edges[i], res.right_edges[i]):
            tag[2 * eid] = tag[2 * eid + 1] = i + 0.5
    outer = g.face == res.new_face
    return _Slit(e, gb, big, tag, outer, res.copy0, res.copy1)


def _derive(child: Embedding, first: np.ndarray, tag, outer_dart):
    """Carry tags and outer-face flags through a derived embedding."""
    od = outer_dart[first]
    of = np.bincount(child.face, weights=od.astype(float), minlength=child.num_faces) > 0
    return tag[first], of[child.face]


def _first_darts(h: Embedding) -> np.ndarray:
    if h.exp_ptr is not None:
        return h.exp_idx[h.exp_ptr[:-1]]
    return h.dart_map


def _chain_first(h: Embedding, stop: Embedding) -> np.ndarray:
    """First ancestor dart (in ``stop``) of each dart of ``h``."""
    idx = np.arange(h.m, dtype=np.int64)
    g = h
    while g is not stop:
        idx = _first_darts(g)[idx]
        g = g.parent
    return idx


def _vertex_chain(h: Embedding, stop: Embedding) -> np.ndarray:
    idx = np.arange(h.n, dtype=np.int64)
    g = h
    while g is not stop:
        idx = g.vertex_map[idx]
        g = g.parent
    return idx


class _Solver:
    def __init__(self, slit: _Slit, p: np.ndarray, audit: ReifAudit | None, contract=True,
                 bound=INF, base_work=BASE_WORK):
        self.base_work = base_work
        self.s = slit
        self.p = p
        self.k = len(p)
        self.audit = audit
        self.contract = contract
        self.best = ReifAnswer(length=bound)
        self.full = None

    def candidate(self, G: Embedding, j: int, orient: str, src: int, dst: int, val: float):
        s = self.s
        if val >= s.big:
            return
        cand = (val, ORIENTATIONS.index(orient), j)
        if self.best.cycle is None:
            if val >= self.best.length:
                return
        elif cand >= self.best.key():
            return
        ptr, adj = G.csr()
        v2, darts = K.lex_path(G.n, ptr, adj, G.head, G.tail, G.weight, src, dst)
        ds = G.to_root([int(d) for d in darts], root=s.root)
        cyc = make_cycle(s.root, ds)
        self.best = ReifAnswer(cyc, j, orient, cyc.length)

    def run(self, orient: str):
        s = self.s
        g = s.g
        k = self.k
        if orient == RIGHT_TO_LEFT:
            src = np.asarray(s.copy0, np.int64)
            dst = np.asarray(s.copy1, np.int64)
        else:
            src = np.asarray(s.copy1, np.int64)
            dst = np.asarray(s.copy0, np.int64)
        if self.audit is not None:
            ptr, adj = g.csr()
            self.full = K.pair_distances(g.n, ptr, adj, g.head, g.weight, src, dst, INF)
        stack = [(g, s.tag, s.outer, src, dst, -1, k + 1)]
        while stack:
            G, tag, outer, sv, dv, lo, hi = stack.pop()
            idx = [j for j in range(lo + 1, hi) if sv[j] >= 0 and dv[j] >= 0]
            if not idx:
                continue
            ptr, adj = G.csr()
            if self.audit is not None:
                ii = np.asarray(idx, np.int64)
                got = K.pair_distances(G.n, ptr, adj, G.head, G.weight, sv[ii], dv[ii], INF)
                self.audit.checks += len(idx)
                for j, a in zip(idx, got):
                    if a != self.full[j]:
                        self.audit.violations.append((orient, j, float(a), float(self.full[j])))
            ii = np.asarray(idx, np.int64)
            lim = min(s.big, self.best.length)
            if self.best.cycle is not None:
                lim = np.nextafter(lim, INF)
            if self.audit is None and lim < s.big and len(idx) > 2:
                # a known bound often keeps every search local; try that first
                got, ok = K.bounded_pairs(G.n, ptr, adj, G.head, G.weight, sv[ii], dv[ii],
                                          lim, 2 * G.m)
                if ok:
                    for j, a in zip(idx, got):
                        self.candidate(G, j, orient, int(sv[j]), int(dv[j]), float(a))
                    continue
            if len(idx) <= 2 or len(idx) * G.m <= self.base_work:
                got = K.pair_distances(G.n, ptr, adj, G.head, G.weight, sv[ii], dv[ii], lim)
                for j, a in zip(idx, got):
                    self.candidate(G, j, orient, int(sv[j]), int(dv[j]), float(a))
                continue
            mid = idx[len(idx) // 2]
            val, path = K.lex_path(G.n, ptr, adj, G.head, G.tail, G.weight, sv[mid], dv[mid])
            self.candidate(G, mid, orient, int(sv[mid]), int(dv[mid]), float(val))
            if not math.isfinite(val):
                stack.append((G, tag, outer, sv, dv, mid, hi))
                stack.append((G, tag, outer, sv, dv, lo, mid))
                continue
            on_mid = np.zeros(G.num_edges, np.bool_)
            on_mid[path >> 1] = True
            of = np.zeros(G.num_faces, np.bool_)
            of[G.face[outer]] = True
            low, high, fs, conflicts = K.classify_sides(
                G.tail, G.face, G.num_faces, of, on_mid, tag, float(mid)
            )
            if self.audit is not None:
                self.audit.conflicts += int(conflicts)
            for side, mask, a, b in ((1, high, mid, hi), (0, low, lo, mid)):
                self._push(stack, G, tag, outer, sv, dv, fs, on_mid, side, mask, a, b)
        return self.best

    def _push(self, stack, G, tag, outer, sv, dv, fs, on_mid, side, mask, a, b):
        prot = np.zeros(G.n, np.bool_)
        for j in range(a + 1, b):
            for x in (sv[j], dv[j]):
                if x >= 0:
                    prot[x] = True
        H = G.subgraph(mask, prot)
        pf = fs[G.face]
        bad = (pf != side) & (pf != 2)
        htag, hout = _derive(H, H.dart_map, tag, bad)
        hmid = on_mid[H.dart_map >> 1]
        htag = htag.copy()
        htag[hmid] = INF if side == 0 else -INF
        H2 = simplify(H, prot[H.vertex_map], self.contract)
        if H2 is not H:
            first = _chain_first(H2, H)
            htag, hout = _derive(H2, first, htag, hout)
        vm = _vertex_chain(H2, G)
        inv = np.full(G.n, -1, np.int64)
        inv[vm] = np.arange(H2.n)
        nsv = np.where(sv >= 0, inv[np.maximum(sv, 0)], -1)
        ndv = np.where(dv >= 0, inv[np.maximum(dv, 0)], -1)
        stack.append((H2, htag, hout, nsv, ndv, a, b))


def shortest_cycle_crossing_once(
    e: Embedding,
    p,
    audit: ReifAudit | None = None,
    contract: bool = True,
    orientations: Sequence[str] = ORIENTATIONS,
    bound: float = INF,
    base_work: int = BASE_WORK,
) -> ReifAnswer:
    """Shortest cycle of ``e`` crossing the simple path ``p`` exactly once.

    Both orientations are solved by divide and conquer.  With ``audit`` every
    subproblem's distances are compared against the whole slit graph.  Only
    cycles strictly shorter than ``bound`` are reported.  Subproblems where
    ``indices * darts <= base_work`` are solved one index at a time; pass
    ``base_work=0`` to divide all the way down.
    """
    p = _darts(p)
    if p.size == 0:
        return ReifAnswer()
    slit = _slit(e, p)
    if slit is None:
        return ReifAnswer()
    solver = _Solver(slit, p, audit, contract, bound, base_work)
    for o in orientations:
        solver.run(o)
    return solver.best


def brute_crossing_once(e: Embedding, p) -> ReifAnswer:
    """Same contract as :func:`shortest_cycle_crossing_once`, one search per index."""
    p = _darts(p)
    if p.size == 0:
        return ReifAnswer()
    slit = _slit(e, p)
    if slit is None:
        return ReifAnswer()
    solver = _Solver(slit, p, None)
    g = slit.g
    ptr, adj = g.csr()
    for o in ORIENTATIONS:
        a, b = (slit.copy0, slit.copy1) if o == RIGHT_TO_LEFT else (slit.copy1, slit.copy0)
        for j in range(len(p) + 1):
            dist, _ = K.sssp(g.n, ptr, adj, g.head, g.weight, a[j], b[j], INF)
            solver.candidate(g, j, o, a[j], b[j], float(dist[b[j]]))
    return solver.best


def check_simple(e: Embedding, p) -> None:
    p = _darts(p)
    vs = [int(e.tail[d]) for d in p] + ([int(e.head[p[-1]])] if p.size else [])
    if len(set(vs)) != len(vs):
        raise NonSimplePath("path repeats a vertex")
