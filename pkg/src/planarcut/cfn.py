"""Global shortest directed cycle by separator recursion, and min cut by duality.

Each recursion node takes a subgraph, splits it into strongly connected
pieces, and finds a face-balanced shortest-path separator in every piece.
The best cycle that meets the separator is found with
:func:`planarcut.reif.shortest_cycle_crossing_once` on both tree paths (both
orientations) plus a direct search through the separator's corner vertices.
The two sides are then handled recursively.  Small pieces are solved by brute
force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .embed import Embedding, dual
from .errors import DegenerateCut, NotStronglyConnected
from .paths import DirectedCycle, make_cycle
from .reif import shortest_cycle_crossing_once
from .surgery import simplify

INF = math.inf
BASE_FACES = 16


@dataclass
class Cut:
    x: list
    y: list
    crossing_darts: list
    capacity: float


@dataclass
class MinCutResult:
    cut: Cut
    dual_cycle: DirectedCycle
    value: float


@dataclass
class Trace:
    """Separator paths visited by the recursion (root dart ids)."""

    nodes: list = field(default_factory=list)


@dataclass
class _Node:
    graph: Embedding
    protect: tuple = ()
    faces: int = -1


def strongly_connected(e: Embedding) -> bool:
    if e.n <= 1:
        return True
    ptr, adj = e.csr()
    _, nc = K.strong_components(e.n, ptr, adj, e.head, e.weight)
    return nc == 1


class _Search:
    def __init__(self, e: Embedding, contract: bool, trace: Trace | None, base_faces: int):
        self.root = e
        self.contract = contract
        self.trace = trace
        self.base_faces = base_faces
        self.best = INF
        self.cycle: list | None = None

    def offer(self, g: Embedding, val: float, darts) -> None:
        if val < self.best:
            ds = g.to_root([int(d) for d in darts], root=self.root)
            self.best = float(val)
            self.cycle = ds

    def _normalize(self, g: Embedding, prot: np.ndarray) -> Embedding:
        while True:
            loops = g.tail == g.head
            if loops.any():
                fin = loops & np.isfinite(g.weight)
                if fin.any():
                    d = int(np.flatnonzero(fin)[np.argmin(g.weight[fin])])
                    self.offer(g, g.weight[d], [d])
                keep = ~loops[0::2]
                g2 = g.subgraph(keep, prot)
                prot = prot[g2.vertex_map]
                g = g2
            g2 = simplify(g, prot, self.contract)
            if g2 is g:
                return g
            prot = prot[_vmap(g2, g)]
            g = g2
            if not (g.tail == g.head).any():
                return g

    def run(self) -> None:
        e = self.root
        fin = np.isfinite(e.weight)
        keep = fin[0::2] | fin[1::2]
        g = e if keep.all() else e.subgraph(keep)
        stack = [_Node(g)]
        while stack:
            node = stack.pop()
            self._process(node, stack)

    def _process(self, node: _Node, stack: list) -> None:
        g = node.graph
        prot = np.zeros(g.n, np.bool_)
        for v in node.protect:
            if v >= 0:
                prot[v] = True
        g = self._normalize(g, prot)
        if g.m == 0:
            return
        ptr, adj = g.csr()
        comp, nc = K.strong_components(g.n, ptr, adj, g.head, g.weight)
        if nc > 1:
            ct, ch = comp[g.tail[0::2]], comp[g.tail[1::2]]
            same = ct == ch
            sizes = np.bincount(ct[same], minlength=nc)
            for c in np.flatnonzero(sizes):
                sub = g.subgraph(same & (ct == c))
                stack.append(_Node(sub, faces=node.faces))
            return
        if g.num_faces <= self.base_faces or g.num_faces >= node.faces > 0:
            val, cyc = K.shortest_proper_cycle(g.n, ptr, adj, g.head, g.weight, self.best)
            if cyc.size:
                self.offer(g, val, cyc)
            return
        self._separate(g, stack)

    def _separate(self, g: Embedding, stack: list) -> None:
        T = _triangulated(g)
        real = np.empty(T.num_faces, np.int64)
        real[T.face[: g.m]] = g.face
        if T.m > g.m:
            chord_darts = np.arange(g.m, T.m)
            real[T.face[chord_darts]] = T.chord_face[(chord_darts - g.m) // 2]
        per_real = np.bincount(real, minlength=g.num_faces)
        fw = 1.0 / per_real[real]
        o = 0
        tptr, tadj = T.csr()
        dist, done = K.sssp(T.n, tptr, tadj, T.head, T.weight, o, -1, INF)
        parent = K.lex_parents(T.n, tptr, tadj, T.head, T.weight, dist, done, o, -1)
        edge, inside, _ = K.fundamental_cycle_cut(T.tail, T.face, T.num_faces, parent, fw, T.face[0])
        u, v = int(T.tail[2 * edge]), int(T.head[2 * edge])
        P = _tree_path(T, parent, o, u)
        P2 = _tree_path(T, parent, o, v)
        w = o
        for a, b in zip(P, P2):
            if a != b:
                break
            w = int(T.head[a])
        if self.trace is not None:
            cover = set(g.to_root(range(g.m), root=self.root))
            self.trace.nodes.append(
                (g.to_root(P, root=self.root), g.to_root(P2, root=self.root), cover)
            )
        ptr, adj = g.csr()
        for x in dict.fromkeys((o, u, v, w)):
            val, cyc = K.cycle_through(g.n, ptr, adj, g.head, g.weight, x, self.best)
            if cyc.size:
                self.offer(g, val, cyc)
        for path in (P, P2):
            if path:
                ans = shortest_cycle_crossing_once(g, path, contract=self.contract, bound=self.best)
                if ans.cycle is not None:
                    self.offer(g, ans.length, ans.cycle.darts)
        on = np.zeros(g.num_edges, np.bool_)
        for d in P + P2:
            on[d >> 1] = True
        if edge < g.num_edges:
            on[edge] = True
        fin = inside[T.face[: g.m]]
        fa, fb = fin[0::2], fin[1::2]
        parts = (on | fa | fb, on | ~fa | ~fb)
        for mask in parts:
            sub = g.subgraph(mask)
            inv = np.full(g.n, -1, np.int64)
            inv[sub.vertex_map] = np.arange(sub.n)
            stack.append(_Node(sub, (int(inv[o]), int(inv[u]), int(inv[v])), g.num_faces))


def _vmap(h: Embedding, stop: Embedding) -> np.ndarray:
    idx = np.arange(h.n, dtype=np.int64)
    g = h
    while g is not stop:
        idx = g.vertex_map[idx]
        g = g.parent
    return idx


def _triangulated(g: Embedding) -> Embedding:
    skip = np.zeros(g.num_faces, np.bool_)
    nt, rn, chord_face = K.triangulate_faces(g.n, g.tail, g.rot_next, g.face, g.num_faces, skip)
    w = np.full(nt.shape[0], INF)
    w[: g.m] = g.weight
    T = Embedding(g.n, nt, w, rn, 0)
    T.chord_face = chord_face
    return T


def _tree_path(T: Embedding, parent: np.ndarray, o: int, x: int) -> list[int]:
    out = []
    while x != o:
        d = int(parent[x])
        out.append(d)
        x = int(T.tail[d])
    out.reverse()
    return out


def shortest_cycle(
    e: Embedding,
    *,
    strict: bool = False,
    contract: bool = True,
    trace: Trace | None = None,
    base_faces: int = BASE_FACES,
) -> DirectedCycle | None:
    """Globally shortest directed cycle of ``e`` (``None`` when acyclic).

    Parameters
    ----------
    strict : bool
        Raise :class:`NotStronglyConnected` instead of searching each
        strongly connected piece.
    contract : bool
        Merge degree-two chains between recursion levels.
    trace : Trace, optional
        Collects every separator path used.
    base_faces : int
        Pieces with at most this many faces are solved by brute force.
    """
    if strict and not strongly_connected(e):
        raise NotStronglyConnected("finite arcs are not strongly connected")
    s = _Search(e, contract, trace, base_faces)
    if not e.proper_only and e.m:
        pair = e.weight[0::2] + e.weight[1::2]
        k = int(np.argmin(pair))
        if math.isfinite(pair[k]):
            s.best = float(pair[k])
            s.cycle = [2 * k, 2 * k + 1]
    s.run()
    if s.cycle is None:
        return None
    return make_cycle(e, s.cycle)


def cut_from_dual_cycle(e: Embedding, darts) -> Cut:
    """Vertex bipartition whose crossing edges are the primal edges of ``darts``.

    ``X`` is the side containing the tail of the first crossed dart.
    """
    odd = np.zeros(e.num_edges, np.bool_)
    for d in darts:
        odd[int(d) >> 1] ^= True
    # parity labelling of the primal skeleton
    label = np.full(e.n, -1, np.int64)
    ptr, adj = e.csr()
    for s0 in range(e.n):
        if label[s0] >= 0:
            continue
        label[s0] = 0
        stack = [s0]
        while stack:
            x = stack.pop()
            for d in adj[ptr[x]:ptr[x + 1]]:
                y = int(e.head[d])
                ly = label[x] ^ int(odd[d >> 1])
                if label[y] < 0:
                    label[y] = ly
                    stack.append(y)
    side = label[e.tail[int(darts[0])]]
    xs = np.flatnonzero(label == side)
    ys = np.flatnonzero(label != side)
    if xs.size == 0 or ys.size == 0:
        raise DegenerateCut("recovered cut has an empty side")
    inx = label == side
    cross = np.flatnonzero(inx[e.tail] & ~inx[e.head] & np.isfinite(e.weight))
    cap = float(e.weight[cross].sum())
    return Cut(xs.tolist(), ys.tolist(), cross.tolist(), cap)


def min_cut(e: Embedding, *, contract: bool = True) -> MinCutResult:
    """Minimum directed cut ``min over X of w(X -> Y)`` via the dual.

    Absent arcs become zero-length dual darts: crossing such an edge costs
    nothing in the cut.  Raises :class:`NotStronglyConnected` when some cut
    has capacity zero by absence of arcs.
    """
    if e.n < 2:
        raise DegenerateCut("a cut needs at least two vertices")
    if not strongly_connected(e):
        raise NotStronglyConnected("primal graph is not strongly connected")
    D = dual(e, absent_weight=0.0)
    c = shortest_cycle(D, contract=contract)
    if c is None:
        raise DegenerateCut("dual has no cycle")
    cut = cut_from_dual_cycle(e, c.darts)
    if not math.isclose(cut.capacity, c.length, rel_tol=1e-12, abs_tol=1e-9):
        raise DegenerateCut(f"capacity {cut.capacity} differs from dual cycle {c.length}")
    return MinCutResult(cut, c, c.length)
