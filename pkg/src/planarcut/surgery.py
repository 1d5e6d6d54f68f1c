"""Graph surgery: incision along a path, splitting along a cycle, contraction.

All operations return fresh embeddings that remember their parent, so darts
of the result can be mapped back with :meth:`Embedding.to_root`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .embed import Embedding
from .errors import NonSimpleCycle, NonSimplePath
from .paths import face_parity

INTERIOR, EXTERIOR, ON_CYCLE = 0, 1, 2


@dataclass
class IncisionResult:
    """Outcome of :func:`incise`.

    Attributes
    ----------
    incised : Embedding
        The slit graph; its ``dart_map`` sends every dart to its original.
    copy0, copy1 : list of int
        Left and right clone of each path vertex ``p_0 .. p_k``.
    left_edges, right_edges : ndarray
        Edge ids of the left and right copy of each path edge.
    new_face : int
        Face of the slit.  With the default corners it also absorbs the
        original faces right of the first and last path edge.
    """

    incised: Embedding
    copy0: list
    copy1: list
    left_edges: np.ndarray
    right_edges: np.ndarray
    new_face: int

    @property
    def dart_map(self) -> np.ndarray:
        return self.incised.dart_map


def default_corners(e: Embedding, p: Sequence[int]) -> tuple[int, int]:
    """Corner darts placing both path ends in the face right of the path."""
    return int(p[0]), int(e.rot_next[int(p[-1]) ^ 1])


def incise(e: Embedding, p: Sequence[int], start_corner=None, end_corner=None) -> IncisionResult:
    """Slit ``e`` open along the simple path ``p``.

    Darts leaving a path vertex on the left of the path stay on the left
    clone ``p_i^0`` and the others move to the right clone ``p_i^1``.  At the
    two ends the corner just clockwise of ``start_corner`` / ``end_corner``
    plays the part of the missing path dart (see
    :func:`planarcut.paths.path_sides`).

    Raises
    ------
    NonSimplePath
        If ``p`` is empty or repeats a vertex.
    """
    p = np.asarray(p, dtype=np.int64)
    if p.size == 0:
        raise NonSimplePath("cannot incise along an empty path")
    for a, b in zip(p[:-1], p[1:]):
        if e.head[a] != e.tail[b]:
            raise NonSimplePath("path darts are not consecutive")
    x0, xk = default_corners(e, p)
    if start_corner is not None:
        x0 = int(start_corner)
    if end_corner is not None:
        xk = int(end_corner)
    nt, rn, dold, left_e, right_e = K.incise_path(e.n, e.tail, e.rot_next, p, x0, xk)
    if left_e[0] < 0:
        raise NonSimplePath("path repeats a vertex")
    k = p.size
    verts = [int(e.tail[d]) for d in p] + [int(e.head[p[-1]])]
    vmap = np.concatenate([np.arange(e.n), np.array(verts, dtype=np.int64)])
    g = Embedding(
        e.n + k + 1, nt, e.weight[dold], rn, 0,
        parent=e, dart_map=dold, vertex_map=vmap, proper_only=e.proper_only,
    )
    b0 = 2 * int(left_e[0]) + (int(p[0]) & 1)
    g.infinite_dart = b0
    return IncisionResult(
        g, verts, [e.n + i for i in range(k + 1)], left_e, right_e, int(g.face[b0])
    )


def sew(res: IncisionResult) -> tuple[np.ndarray, np.ndarray]:
    """Undo an incision: vertex and dart maps back onto the original.

    Returns the original tail of each incised dart and the original dart;
    sewing is exact when these reproduce the original arrays.
    """
    g = res.incised
    return g.vertex_map[g.tail], g.dart_map


# ---------------------------------------------------------------- splitting


@dataclass
class SplitResult:
    interior: Embedding
    exterior: Embedding
    vertex_side: np.ndarray
    inside_faces: np.ndarray


def split_along_cycle(e: Embedding, c: Sequence[int]) -> SplitResult:
    """Split ``e`` into the parts enclosed and not enclosed by cycle ``c``.

    Both parts keep the cycle's edges.  ``vertex_side`` uses
    :data:`INTERIOR`, :data:`EXTERIOR` and :data:`ON_CYCLE`.
    """
    c = [int(d) for d in c]
    verts = [int(e.tail[d]) for d in c]
    simple = len(set(verts)) == len(verts) == len({d >> 1 for d in c})
    if not c or not simple or e.head[c[-1]] != e.tail[c[0]]:
        raise NonSimpleCycle("split needs a simple closed walk")
    inside = face_parity(e, c)
    on = np.zeros(e.num_edges, bool)
    on[np.asarray(c) >> 1] = True
    fi = inside[e.face]
    fa, fb = fi[0::2], fi[1::2]
    keep_in = on | fa | fb
    keep_out = on | ~fa | ~fb
    side = np.full(e.n, EXTERIOR, np.int64)
    vin = np.zeros(e.n, bool)
    vin[e.tail[fi]] = True
    side[vin] = INTERIOR
    side[verts] = ON_CYCLE
    return SplitResult(e.subgraph(keep_in), e.subgraph(keep_out), side, inside)


# ---------------------------------------------------------------- contraction


@dataclass
class ContractionMap:
    contracted: Embedding

    def expansion(self, d: int) -> list[int]:
        """Original darts merged into contracted dart ``d``."""
        return self.contracted.expand([d])


def contract_degree_two(e: Embedding, protected: Iterable[int] = ()) -> ContractionMap:
    """Merge the two edges at every unprotected vertex of skeleton degree two.

    Weights add per direction, so an absent arc anywhere on a chain makes
    that direction of the merged edge absent.
    """
    prot = np.zeros(e.n, np.bool_)
    for v in protected:
        prot[int(v)] = True
    return ContractionMap(_contract(e, prot))


def _contract(e: Embedding, prot: np.ndarray) -> Embedding:
    nv, nt, nr, nw, eptr, eidx, vold = K.contract_paths(e.n, e.tail, e.rot_next, e.weight, prot)
    return Embedding(
        nv, nt, nw, nr, 0,
        parent=e, exp_ptr=eptr, exp_idx=eidx, vertex_map=vold, proper_only=e.proper_only,
    )


def prune_leaves(e: Embedding, prot: np.ndarray) -> Embedding:
    """Drop pendant trees not containing protected vertices."""
    keep = K.prune_leaves(e.n, e.tail, prot)
    if keep.all():
        return e
    return e.subgraph(keep, prot)


def simplify(e: Embedding, prot: np.ndarray, contract: bool = True) -> Embedding:
    """Prune pendant trees, then (optionally) contract degree-two chains."""
    g = prune_leaves(e, prot)
    if contract and g.m:
        if g is not e:
            prot = prot[g.vertex_map]
        deg = g.degree()
        if np.any((deg == 2) & ~prot):
            g = _contract(g, prot)
    return g
