"""Shortest paths with lexicographic tie-breaking, crossings and enclosure."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels as K
from .embed import Embedding
from .errors import NonSimplePath, NotACycle, Unreachable

INF = math.inf


@dataclass(frozen=True)
class DirectedPath:
    """Dart sequence ``darts`` of total length ``length``."""

    darts: tuple
    length: float

    def __len__(self) -> int:
        return len(self.darts)

    def vertices(self, e: Embedding) -> list[int]:
        if not self.darts:
            return []
        return [int(e.tail[d]) for d in self.darts] + [int(e.head[self.darts[-1]])]


@dataclass(frozen=True)
class DirectedCycle(DirectedPath):
    """Closed dart sequence; may repeat vertices but never darts."""

    def vertices(self, e: Embedding) -> list[int]:
        return [int(e.tail[d]) for d in self.darts]


@dataclass
class ShortestPathTree:
    root: int
    parent: np.ndarray
    dist: np.ndarray


def walk_length(e: Embedding, darts: Sequence[int]) -> float:
    return float(sum(e.weight[d] for d in darts))


def make_path(e: Embedding, darts: Sequence[int]) -> DirectedPath:
    darts = tuple(int(d) for d in darts)
    for a, b in zip(darts, darts[1:]):
        if e.head[a] != e.tail[b]:
            raise ValueError(f"darts {a} and {b} are not consecutive")
    return DirectedPath(darts, walk_length(e, darts))


def make_cycle(e: Embedding, darts: Sequence[int]) -> DirectedCycle:
    darts = tuple(int(d) for d in darts)
    if not darts:
        raise NotACycle("empty cycle")
    for a, b in zip(darts, darts[1:] + darts[:1]):
        if e.head[a] != e.tail[b]:
            raise NotACycle(f"darts {a} and {b} are not consecutive")
    return DirectedCycle(darts, walk_length(e, darts))


def dijkstra(e: Embedding, root: int) -> ShortestPathTree:
    """Lexicographically unique shortest-path tree from ``root``.

    Among equal-length paths the one with the smaller dart-id sequence wins,
    so the result does not depend on heap tie order.
    """
    ptr, adj = e.csr()
    dist, done = K.sssp(e.n, ptr, adj, e.head, e.weight, root, -1, INF)
    parent = K.lex_parents(e.n, ptr, adj, e.head, e.weight, dist, done, root, -1)
    return ShortestPathTree(int(root), parent, dist)


def extract_path(e: Embedding, t: ShortestPathTree, v: int) -> DirectedPath:
    if not math.isfinite(t.dist[v]):
        raise Unreachable(f"vertex {v} is unreachable from {t.root}")
    out = []
    while v != t.root:
        d = int(t.parent[v])
        out.append(d)
        v = int(e.tail[d])
    out.reverse()
    return DirectedPath(tuple(out), walk_length(e, out))


def shortest_path(e: Embedding, s: int, t: int, weight=None) -> DirectedPath | None:
    """Lexicographically least shortest ``s``-``t`` path, or ``None``."""
    ptr, adj = e.csr()
    w = e.weight if weight is None else weight
    val, darts = K.lex_path(e.n, ptr, adj, e.head, e.tail, w, s, t)
    if not math.isfinite(val):
        return None
    return DirectedPath(tuple(int(d) for d in darts), float(val))


# ---------------------------------------------------------------- sides


def _rot_positions(e: Embedding, ref: int) -> dict[int, int]:
    pos = {ref: 0}
    d = int(e.rot_next[ref])
    i = 1
    while d != ref:
        pos[d] = i
        d = int(e.rot_next[d])
        i += 1
    return pos


def path_sides(
    e: Embedding,
    q: Sequence[int],
    closed: bool = False,
    start_corner: int | None = None,
    end_corner: int | None = None,
    endpoints: bool = True,
) -> dict[int, dict[int, int]]:
    """Side (+1 left, -1 right) of every off-path dart at each path vertex.

    At an endpoint the missing path dart is replaced by a reference corner:
    the corner just clockwise of ``start_corner`` (default ``q[0]``) at the
    start and of ``end_corner`` (default ``rot_next[twin(q[-1])]``) at the
    end.  With the defaults both corners sit in the face right of the path,
    so every other dart at an endpoint is on the left.  ``endpoints=False``
    leaves endpoint sides undefined.
    """
    q = [int(d) for d in q]
    k = len(q)
    out: dict[int, dict[int, int]] = {}
    if k == 0:
        return out
    verts = [int(e.tail[d]) for d in q]
    if not closed:
        verts.append(int(e.head[q[-1]]))
    for i, v in enumerate(verts):
        internal = closed or 0 < i < k
        sides: dict[int, int] = {}
        if internal:
            a, b = q[i - 1], q[i % k]
            pos = _rot_positions(e, b)
            ta = pos[a ^ 1]
            for d, p in pos.items():
                if d in (b, a ^ 1):
                    continue
                sides[d] = 1 if p < ta else -1
        elif not endpoints:
            continue
        elif i == 0:
            b = q[0]
            pos = _rot_positions(e, b)
            x0 = b if start_corner is None else int(start_corner)
            c = pos[x0] or len(pos)
            for d, p in pos.items():
                if d != b:
                    sides[d] = 1 if p < c else -1
        else:
            t = q[-1] ^ 1
            pos = _rot_positions(e, t)
            xk = int(e.rot_next[t]) if end_corner is None else int(end_corner)
            c = pos[xk] or len(pos)
            for d, p in pos.items():
                if d != t:
                    sides[d] = 1 if p >= c else -1
        out[v] = sides
    return out


def _is_closed(e: Embedding, darts: Sequence[int]) -> bool:
    return len(darts) > 0 and e.head[darts[-1]] == e.tail[darts[0]]


def crossing_number(
    e: Embedding,
    p: Sequence[int],
    q: Sequence[int],
    start_corner: int | None = None,
    end_corner: int | None = None,
    endpoints: bool = True,
) -> int:
    """Signed number of times walk ``p`` crosses the simple path or cycle ``q``.

    Each maximal stretch of ``p`` that stays on ``q`` (a single shared vertex
    or a run along ``q``'s edges, in either direction) is a crossing when
    ``p`` arrives on one side of ``q`` and leaves on the other.  Right to left
    counts ``+1``, left to right ``-1``.  Endpoint conventions follow
    :func:`path_sides`.
    """
    p = [int(d) for d in p]
    q = [int(d) for d in q]
    if not p or not q:
        return 0
    qclosed = _is_closed(e, q)
    qverts = [int(e.tail[d]) for d in q] + ([] if qclosed else [int(e.head[q[-1]])])
    qset = set(qverts)
    if len(qset) != len(qverts):
        raise NonSimplePath("reference path must be vertex-simple")
    sides = path_sides(e, q, qclosed, start_corner, end_corner, endpoints)
    qedges = {d >> 1 for d in q}
    pclosed = _is_closed(e, p)
    on_q = [d >> 1 in qedges for d in p]
    if all(on_q):
        return 0
    if pclosed:
        j0 = on_q.index(False)
        p = p[j0 + 1:] + p[: j0 + 1]
        on_q = on_q[j0 + 1:] + on_q[: j0 + 1]
        # p now ends with an off-q dart, so position 0 is entered from it
    total = 0
    L = len(p)
    j = 0
    while j < L:
        v = int(e.tail[p[j]])
        if v not in sides and v not in qset:
            j += 1
            continue
        start = j
        while j < L and on_q[j]:
            j += 1
        if j >= L:
            break
        if start == 0 and not pclosed:
            j += 1
            continue
        entry = p[start - 1] ^ 1
        exit_ = p[j]
        vin = int(e.tail[p[start]])
        vout = int(e.tail[exit_])
        s_in = sides.get(vin, {}).get(entry)
        s_out = sides.get(vout, {}).get(exit_)
        if s_in is not None and s_out is not None and s_in != s_out:
            total += 1 if s_out > 0 else -1
        j += 1
    return total


def face_parity(e: Embedding, c: Sequence[int]) -> np.ndarray:
    """Enclosure parity of every face with respect to closed walk ``c``."""
    odd = np.zeros(e.num_edges, np.bool_)
    for d in c:
        odd[int(d) >> 1] ^= True
    return K.face_parity(e.face, e.num_faces, odd, e.infinite_face).astype(bool)


def encloses(e: Embedding, c: Sequence[int], f: int) -> bool:
    """Whether closed walk ``c`` encloses face ``f``."""
    if not _is_closed(e, c):
        raise NotACycle("encloses needs a closed walk")
    return bool(face_parity(e, c)[f])
