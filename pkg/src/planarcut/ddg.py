"""r-divisions and dense distance graphs.

An r-division splits the edges of a planar graph into pieces of at most
``r`` vertices each; vertices shared by two or more pieces are boundary
vertices.  The dense distance graph (DDG) of a piece is the complete directed
graph on its boundary, weighted by shortest distances inside the piece.
Distances between boundary vertices in the whole graph equal distances in the
union of all piece DDGs, because every path breaks at boundary vertices into
intra-piece segments.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .embed import Embedding
from .errors import BoundsUnachievable, NotBoundary

INF = math.inf
C1 = 40.0
C2 = 20.0


@dataclass
class Piece:
    """Edge ids of one piece with its vertex set and boundary (global ids)."""

    edges: np.ndarray
    vertices: np.ndarray
    boundary: np.ndarray = field(default_factory=lambda: np.empty(0, np.int64))
    holes: int = 0


@dataclass
class RDivision:
    r: int
    pieces: list
    piece_of_edge: np.ndarray
    is_boundary: np.ndarray
    c1: float = C1
    c2: float = C2

    @property
    def boundary_vertices(self) -> np.ndarray:
        return np.flatnonzero(self.is_boundary)

    def violations(self, n: int) -> list[str]:
        """Bound checks that fail (empty when the division is valid)."""
        out = []
        if len(self.pieces) > max(1.0, self.c1 * n / self.r):
            out.append(f"{len(self.pieces)} pieces exceed {self.c1} * n / r")
        lim = self.c2 * math.sqrt(self.r)
        for i, p in enumerate(self.pieces):
            if p.vertices.size > self.r:
                out.append(f"piece {i} has {p.vertices.size} > r vertices")
            if p.boundary.size > lim:
                out.append(f"piece {i} has {p.boundary.size} boundary vertices")
        return out


@dataclass
class DenseDistanceGraph:
    """Per piece: boundary ids and the matrix of intra-piece distances."""

    division: RDivision
    boundary: list
    dist: list

    def union(self) -> dict:
        """Adjacency of the DDG union: vertex -> list of (head, length)."""
        if getattr(self, "_union", None) is None:
            out: dict[int, list[tuple[int, float]]] = {}
            for b, mat in zip(self.boundary, self.dist):
                for i, x in enumerate(b.tolist()):
                    lst = out.setdefault(x, [])
                    for j in np.flatnonzero(np.isfinite(mat[i])):
                        if j != i:
                            lst.append((int(b[j]), float(mat[i, j])))
            self._union = out
        return self._union

    @property
    def vertex_total(self) -> int:
        return int(sum(b.size for b in self.boundary))

    @property
    def edge_total(self) -> int:
        return int(sum(b.size * b.size for b in self.boundary))


# ---------------------------------------------------------------- division


def _bfs_order(verts, adj) -> list[int]:
    """BFS order over ``verts`` from a peripheral vertex of each component."""
    seen: set[int] = set()
    order: list[int] = []
    for s in verts:
        if s in seen:
            continue
        # double sweep for a far-away start
        last = s
        local = {s}
        q = deque([s])
        while q:
            x = q.popleft()
            last = x
            for y in adj[x]:
                if y not in local:
                    local.add(y)
                    q.append(y)
        seen.add(last)
        q = deque([last])
        while q:
            x = q.popleft()
            order.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    q.append(y)
    return order


def _split(e: Embedding, edges: np.ndarray, weight_of=None):
    """Split an edge set into a BFS prefix and the rest.

    The prefix is the set of edges induced by the first ``T`` vertices in BFS
    order, so the shared vertices form a BFS frontier.  ``T`` halves the
    vertex count, or the weight given by ``weight_of`` when set.
    """
    u = e.tail[2 * edges]
    v = e.tail[2 * edges + 1]
    adj: dict[int, list[int]] = {}
    for a, b in zip(u.tolist(), v.tolist()):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    order = _bfs_order(sorted(adj), adj)
    rank = {x: i for i, x in enumerate(order)}
    key = np.array([max(rank[a], rank[b]) for a, b in zip(u.tolist(), v.tolist())], np.int64)
    srt = np.argsort(key, kind="stable")
    if weight_of is None:
        T = (len(order) + 1) // 2
    else:
        wts = np.array([weight_of(x) for x in order], float)
        cum = np.cumsum(wts)
        T = int(np.searchsorted(cum, cum[-1] / 2.0)) + 1 if cum[-1] > 0 else (len(order) + 1) // 2
    cut = int(np.searchsorted(key[srt], T))
    if cut <= 0 or cut >= edges.size:
        cut = edges.size // 2
    return edges[srt[:cut]], edges[srt[cut:]]


def _vertices(e: Embedding, edges: np.ndarray) -> np.ndarray:
    return np.unique(np.concatenate([e.tail[2 * edges], e.tail[2 * edges + 1]]))


def _holes(e: Embedding, edges: np.ndarray) -> int:
    """Faces of a piece that are not faces of the whole graph."""
    keep = np.zeros(e.num_edges, np.bool_)
    keep[edges] = True
    sub = e.subgraph(keep)
    orig = e.face[sub.dart_map]
    sizes = e.face_sizes()
    holes = 0
    for f in range(sub.num_faces):
        fo = orig[sub.face == f]
        if not (np.all(fo == fo[0]) and sizes[fo[0]] == fo.size):
            holes += 1
    return holes


def build_r_division(e: Embedding, r: int, c1: float = C1, c2: float = C2) -> RDivision:
    """Two-phase recursive division into pieces of at most ``r`` vertices.

    Phase one halves pieces by vertex count until each fits; phase two
    re-splits pieces whose boundary exceeds ``c2 * sqrt(r)``, balancing the
    boundary vertices.  Each piece reports its number of holes (faces that
    are not faces of ``e``) without any limit being enforced.

    Raises
    ------
    BoundsUnachievable
        If a bound still fails after both phases.
    """
    if r < 4:
        raise ValueError("r must be at least 4")
    ne = e.num_edges
    done: list[np.ndarray] = []
    work = [np.arange(ne, dtype=np.int64)] if ne else []
    while work:
        ed = work.pop()
        if ed.size <= 1 or _vertices(e, ed).size <= r:
            done.append(ed)
            continue
        work.extend(_split(e, ed))
    lim = c2 * math.sqrt(r)
    while True:
        count = np.zeros(e.n, np.int64)
        for ed in done:
            count[_vertices(e, ed)] += 1
        bnd = count >= 2
        over = [i for i, ed in enumerate(done)
                if ed.size > 1 and bnd[_vertices(e, ed)].sum() > lim]
        if not over:
            break
        skip = set(over)
        nxt = [ed for i, ed in enumerate(done) if i not in skip]
        for i in over:
            nxt.extend(_split(e, done[i], lambda x: 1.0 if bnd[x] else 0.0))
        done = nxt
    poe = np.full(ne, -1, np.int64)
    pieces = []
    for i, ed in enumerate(done):
        poe[ed] = i
        vs = _vertices(e, ed)
        pieces.append(Piece(np.sort(ed), vs, vs[bnd[vs]], _holes(e, ed)))
    if not pieces and e.n:
        pieces.append(Piece(np.empty(0, np.int64), np.arange(e.n, dtype=np.int64)))
    rd = RDivision(int(r), pieces, poe, bnd, c1, c2)
    bad = rd.violations(e.n)
    if bad:
        raise BoundsUnachievable("; ".join(bad))
    return rd


# ---------------------------------------------------------------- ddg


def piece_embedding(e: Embedding, piece: Piece) -> Embedding:
    keep = np.zeros(e.num_edges, np.bool_)
    keep[piece.edges] = True
    return e.subgraph(keep)


def build_ddg(e: Embedding, rd: RDivision) -> DenseDistanceGraph:
    """Exact intra-piece distances between the boundary vertices of each piece.

    One Dijkstra per boundary vertex inside its piece.
    """
    bs, ds = [], []
    for piece in rd.pieces:
        b = piece.boundary
        mat = np.full((b.size, b.size), INF)
        if b.size:
            sub = piece_embedding(e, piece)
            local = np.searchsorted(sub.vertex_map, b)
            ptr, adj = sub.csr()
            for i, s in enumerate(local):
                dist, _ = K.sssp(sub.n, ptr, adj, sub.head, sub.weight, int(s), -1, INF)
                mat[i] = dist[local]
        bs.append(b)
        ds.append(mat)
    return DenseDistanceGraph(rd, bs, ds)


def ddg_distance(d: DenseDistanceGraph, u: int, v: int) -> float:
    """Distance from ``u`` to ``v`` by Dijkstra over the union of piece DDGs.

    Raises
    ------
    NotBoundary
        If ``u`` or ``v`` is not a boundary vertex.
    """
    isb = d.division.is_boundary
    for x in (u, v):
        if not (0 <= x < isb.size and isb[x]):
            raise NotBoundary(f"vertex {x} is not a boundary vertex")
    if u == v:
        return 0.0
    out = d.union()
    dist = {u: 0.0}
    pq = [(0.0, u)]
    while pq:
        k, x = heapq.heappop(pq)
        if k > dist.get(x, INF):
            continue
        if x == v:
            return k
        for y, w in out.get(x, ()):
            nk = k + w
            if nk < dist.get(y, INF):
                dist[y] = nk
                heapq.heappush(pq, (nk, y))
    return INF
