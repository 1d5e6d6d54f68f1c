"""Shortest-path separators: a fundamental cycle balanced by face count.

The directed shortest-path tree from a root ``o`` spans the graph when the
finite arcs are strongly connected.  Every non-tree edge ``uv`` closes an
undirected cycle ``P(o->u) + uv + reverse(P(o->v))``; the faces it encloses
are the dual subtree hanging below ``uv`` in the interdigitating dual tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .embed import Embedding
from .errors import NotStronglyConnected, NotTriangulated
from .paths import DirectedPath, ShortestPathTree, dijkstra, extract_path, face_parity

INF = math.inf


@dataclass
class Separator:
    """Fundamental cycle of the tree from ``root`` closed by ``closing_dart``.

    ``closing_dart`` runs from the end of ``path_p`` to the end of
    ``path_pprime``.  ``inside`` flags the faces counted in ``inside_faces``.
    """

    root: int
    closing_dart: int
    path_p: DirectedPath
    path_pprime: DirectedPath
    inside_faces: int
    outside_faces: int
    inside: np.ndarray

    @property
    def total_faces(self) -> int:
        return self.inside_faces + self.outside_faces

    def cycle_darts(self) -> list[int]:
        """Undirected closed walk ``P + uv + reverse(P')`` as darts."""
        back = [d ^ 1 for d in reversed(self.path_pprime.darts)]
        return list(self.path_p.darts) + [self.closing_dart] + back


def balance_limit(total_faces: int) -> int:
    return math.ceil(2 * total_faces / 3)


def _check(e: Embedding) -> None:
    if e.m and (e.face_sizes() > 3).any():
        raise NotTriangulated("every face must have at most three sides")
    if e.n > 1:
        ptr, adj = e.csr()
        _, nc = K.strong_components(e.n, ptr, adj, e.head, e.weight)
        if nc != 1:
            raise NotStronglyConnected("finite arcs are not strongly connected")


def shortest_path_separator(e: Embedding, o: int = 0) -> Separator:
    """Face-balanced shortest-path separator rooted at ``o``.

    Every face weighs one.  Among the non-tree edges the one minimising the
    larger side wins, ties going to the smallest edge id.

    Raises
    ------
    NotTriangulated
        If some face has more than three sides.
    NotStronglyConnected
        If the finite arcs do not form one strongly connected graph.
    """
    _check(e)
    tree = dijkstra(e, o)
    fw = np.ones(e.num_faces)
    root_face = int(e.face[0]) if e.m else 0
    edge, inside, cnt = K.fundamental_cycle_cut(
        e.tail, e.face, e.num_faces, tree.parent, fw, root_face
    )
    if edge < 0:
        raise NotTriangulated("no non-tree edge to close a cycle")
    d = 2 * int(edge)
    u, v = int(e.tail[d]), int(e.head[d])
    p = extract_path(e, tree, u)
    q = extract_path(e, tree, v)
    inner = int(round(cnt))
    return Separator(int(o), d, p, q, inner, e.num_faces - inner, inside)


def fundamental_counts(e: Embedding, tree: ShortestPathTree) -> dict[int, tuple[int, int]]:
    """Face counts on the two sides of every non-tree edge's cycle.

    Computed one cycle at a time by enclosure parity, independently of the
    dual-tree bookkeeping.  Keys are edge ids; values are
    ``(enclosed, not enclosed)`` with the infinite face on the second side.
    """
    intree = np.zeros(e.num_edges, bool)
    for v in range(e.n):
        if tree.parent[v] >= 0:
            intree[int(tree.parent[v]) >> 1] = True
    out = {}
    for k in np.flatnonzero(~intree):
        d = 2 * int(k)
        p = extract_path(e, tree, int(e.tail[d])).darts
        q = extract_path(e, tree, int(e.head[d])).darts
        walk = list(p) + [d] + [x ^ 1 for x in reversed(q)]
        par = face_parity(e, walk)
        a = int(par.sum())
        out[int(k)] = (a, e.num_faces - a)
    return out
