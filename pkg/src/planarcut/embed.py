"""Combinatorial embeddings of directed planar multigraphs.

An embedding stores every skeleton edge ``k`` as two twin darts, ``2k``
(``u -> v``) and ``2k + 1`` (``v -> u``), each with its own length.  An
infinite length marks an absent arc.  The rotation system lists, for each
vertex, its outgoing darts in counterclockwise order; faces are traced with
``next(d) = rot_next[twin(d)]`` so that ``face[d]`` is the face on the right
of ``d``.

Derived embeddings (subgraphs, incisions, contractions) keep a lazy pointer
to their parent together with a dart expansion map, so a walk can be pulled
back to the original graph only when it is actually needed.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    InputError,
    InvalidEdge,
    MalformedRotation,
    NegativeWeight,
    NonPlanarRotation,
)

INF = math.inf


class Embedding:
    """Rotation-system embedding with per-dart weights.

    Parameters
    ----------
    n : int
        Number of vertices.
    tail : ndarray of int64
        Tail vertex of every dart; ``tail[d ^ 1]`` is the head of ``d``.
    weight : ndarray of float64
        Dart lengths, ``inf`` for absent arcs.
    rot_next : ndarray of int64
        Counterclockwise successor of each dart around its tail.
    infinite_dart : int, optional
        A dart whose right face is designated as the infinite face.
    parent : Embedding, optional
        Embedding this one was derived from.
    exp_ptr, exp_idx : ndarray, optional
        CSR map from each dart to the parent darts it stands for.  ``None``
        with a parent means dart ``d`` is parent dart ``dart_map[d]``.
    dart_map : ndarray, optional
        One-to-one dart map to the parent (``-1`` for darts with no origin).
    vertex_map : ndarray, optional
        Parent vertex of each vertex.
    proper_only : bool
        When true, a pair of twin darts does not count as a cycle.
    """

    def __init__(
        self,
        n,
        tail,
        weight,
        rot_next,
        infinite_dart=0,
        *,
        parent=None,
        exp_ptr=None,
        exp_idx=None,
        dart_map=None,
        vertex_map=None,
        proper_only=False,
    ):
        self.n = int(n)
        self.tail = np.ascontiguousarray(tail, dtype=np.int64)
        self.weight = np.ascontiguousarray(weight, dtype=np.float64)
        self.rot_next = np.ascontiguousarray(rot_next, dtype=np.int64)
        m = self.tail.shape[0]
        self.m = m
        self.head = self.tail.reshape(-1, 2)[:, ::-1].ravel().copy() if m else self.tail.copy()
        self.rot_prev = np.empty(m, np.int64)
        self.rot_prev[self.rot_next] = np.arange(m, dtype=np.int64)
        self.face, self.num_faces = K.trace_faces(self.rot_next)
        self.infinite_dart = int(infinite_dart) if m else -1
        self.parent = parent
        self.exp_ptr = exp_ptr
        self.exp_idx = exp_idx
        self.dart_map = dart_map
        self.vertex_map = vertex_map
        self.proper_only = proper_only
        self._csr = None

    # ------------------------------------------------------------ basics

    @property
    def num_edges(self) -> int:
        return self.m // 2

    @property
    def infinite_face(self) -> int:
        return int(self.face[self.infinite_dart]) if self.m else 0

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def csr(self):
        """Outgoing-dart adjacency ``(ptr, adj)`` sorted by dart id."""
        if self._csr is None:
            self._csr = K.out_csr(self.n, self.tail)
        return self._csr

    def rotation(self, v: int) -> list[int]:
        """Darts leaving ``v`` in counterclockwise order."""
        ptr, adj = self.csr()
        if ptr[v] == ptr[v + 1]:
            return []
        d0 = int(adj[ptr[v]])
        out = [d0]
        d = int(self.rot_next[d0])
        while d != d0:
            out.append(d)
            d = int(self.rot_next[d])
        return out

    def face_darts(self, f: int) -> list[int]:
        """Boundary walk of face ``f``; the face lies right of every dart."""
        d0 = int(np.flatnonzero(self.face == f)[0])
        out = [d0]
        d = int(self.rot_next[d0 ^ 1])
        while d != d0:
            out.append(d)
            d = int(self.rot_next[d ^ 1])
        return out

    def face_sizes(self) -> np.ndarray:
        return np.bincount(self.face, minlength=self.num_faces)

    def degree(self) -> np.ndarray:
        return np.bincount(self.tail, minlength=self.n)

    def components(self) -> tuple[np.ndarray, int]:
        return K.vertex_components(self.n, self.tail)

    def euler_ok(self) -> bool:
        """Check ``V - E + F = 2`` on every connected component."""
        comp, nc = self.components()
        if nc == 0:
            return True
        V = np.bincount(comp, minlength=nc)
        E = np.bincount(comp[self.tail[0::2]], minlength=nc) if self.m else np.zeros(nc, np.int64)
        F = np.zeros(nc, np.int64)
        if self.m:
            face_comp = np.full(self.num_faces, -1, np.int64)
            face_comp[self.face] = comp[self.tail]
            F = np.bincount(face_comp, minlength=nc)
        F = np.where(E == 0, 1, F)
        return bool(np.all(V - E + F == 2))

    def total_weight(self) -> float:
        w = self.weight
        return float(w[np.isfinite(w)].sum())

    # ------------------------------------------------------------ provenance

    def expand(self, darts: Iterable[int]) -> list[int]:
        """Map darts of this embedding to darts of its parent."""
        out: list[int] = []
        if self.exp_ptr is not None:
            p, ix = self.exp_ptr, self.exp_idx
            for d in darts:
                out.extend(int(x) for x in ix[p[d]:p[d + 1]])
        else:
            mp = self.dart_map
            for d in darts:
                x = int(mp[d])
                if x >= 0:
                    out.append(x)
        return out

    def to_root(self, darts: Iterable[int], root=None) -> list[int]:
        """Follow the provenance chain up to ``root`` (default: the top)."""
        g = self
        ds = list(darts)
        while g.parent is not None and g is not root:
            ds = g.expand(ds)
            g = g.parent
        return ds

    def vertex_to_root(self, v: int, root=None) -> int:
        g = self
        while g.parent is not None and g is not root:
            v = int(g.vertex_map[v])
            g = g.parent
        return v

    # ------------------------------------------------------------ derived graphs

    def subgraph(self, keep_edge, keep_vertex=None) -> "Embedding":
        """Embedding induced by the edges flagged in ``keep_edge``."""
        kv = np.zeros(self.n, np.bool_) if keep_vertex is None else np.asarray(keep_vertex, np.bool_)
        nv, nt, nr, dold, vold = K.edge_subgraph(
            self.n, self.tail, self.rot_next, np.asarray(keep_edge, np.bool_), kv
        )
        return Embedding(
            nv, nt, self.weight[dold], nr, 0,
            parent=self, dart_map=dold, vertex_map=vold, proper_only=self.proper_only,
        )

    def reweighted(self, weight) -> "Embedding":
        g = Embedding(
            self.n, self.tail, weight, self.rot_next, self.infinite_dart,
            parent=self, dart_map=np.arange(self.m, dtype=np.int64),
            vertex_map=np.arange(self.n, dtype=np.int64), proper_only=self.proper_only,
        )
        g._csr = self._csr
        return g

    # ------------------------------------------------------------ export

    def edge_list(self) -> list[tuple[int, int, float, float]]:
        t, w = self.tail, self.weight
        return [
            (int(t[2 * k]), int(t[2 * k + 1]), float(w[2 * k]), float(w[2 * k + 1]))
            for k in range(self.num_edges)
        ]

    def rotations(self) -> list[list[int]]:
        return [self.rotation(v) for v in range(self.n)]

    def __repr__(self) -> str:
        return f"Embedding(n={self.n}, edges={self.num_edges}, faces={self.num_faces})"


class DualEmbedding(Embedding):
    """Planar dual: one vertex per primal face, one dart per primal dart.

    Dual dart ``d`` runs from the face left of primal dart ``d`` to the face
    on its right and keeps the primal weight.  Twin pairs cross one primal
    edge back and forth, so they are not counted as cycles.
    """

    def __init__(self, primal: Embedding, absent_weight: float = INF):
        e = primal
        tail = e.face[np.arange(e.m) ^ 1]
        w = e.weight.copy()
        if absent_weight != INF:
            w[~np.isfinite(w)] = absent_weight
        rot_next = e.rot_prev[np.arange(e.m) ^ 1]
        super().__init__(e.num_faces, tail, w, rot_next, 0, proper_only=True)
        self.primal = primal

    def primal_of(self, d: int) -> int:
        return int(d)

    def face_vertex(self) -> np.ndarray:
        """Primal vertex corresponding to each dual face."""
        out = np.empty(self.num_faces, np.int64)
        out[self.face] = self.primal.tail
        return out


def dual(e: Embedding, absent_weight: float = INF) -> DualEmbedding:
    """Planar dual of ``e``.

    Parameters
    ----------
    e : Embedding
    absent_weight : float
        Weight given to dual darts whose primal arc is absent.  The default
        keeps them absent; min-cut computations pass ``0`` because an absent
        arc contributes nothing to a cut's capacity.
    """
    return DualEmbedding(e, absent_weight)


# ---------------------------------------------------------------- construction


def _as_weight(x) -> float:
    if x is None:
        return INF
    w = float(x)
    if math.isnan(w) or w < 0:
        raise NegativeWeight(f"weight {x!r} is negative or NaN")
    return w


def build_embedding(
    vertex_count: int,
    edges: Sequence[Sequence],
    rotations: Sequence[Sequence[int]] | None = None,
    infinite_face_dart: int | None = None,
    *,
    validate: bool = True,
) -> Embedding:
    """Build and validate an embedding.

    Parameters
    ----------
    vertex_count : int
    edges : sequence of ``(u, v, w_uv, w_vu)``
        ``None`` or ``inf`` weights mark absent arcs.
    rotations : sequence of dart lists, optional
        Counterclockwise outgoing darts per vertex.  When omitted, darts are
        taken in input order, which is only planar for simple inputs.
    infinite_face_dart : int, optional
        The infinite face is the face right of this dart (default dart 0).

    Raises
    ------
    InvalidEdge, NegativeWeight, MalformedRotation, NonPlanarRotation
    """
    n = int(vertex_count)
    if n < 0:
        raise InputError("vertex count must be non-negative")
    m = 2 * len(edges)
    tail = np.empty(m, np.int64)
    weight = np.empty(m, np.float64)
    for k, edge in enumerate(edges):
        if len(edge) not in (2, 3, 4):
            raise InvalidEdge(f"edge {k} must be [u, v, wUV, wVU]")
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge {k} references a missing vertex")
        if u == v:
            raise InvalidEdge(f"edge {k} is a self-loop")
        wuv = _as_weight(edge[2]) if len(edge) > 2 else 1.0
        wvu = _as_weight(edge[3]) if len(edge) > 3 else INF
        tail[2 * k], tail[2 * k + 1] = u, v
        weight[2 * k], weight[2 * k + 1] = wuv, wvu
    if rotations is None:
        rotations = [[] for _ in range(n)]
        for d in range(m):
            rotations[tail[d]].append(d)
    if len(rotations) != n:
        raise MalformedRotation("need one rotation list per vertex")
    rot_next = np.full(m, -1, np.int64)
    seen = np.zeros(m, np.bool_)
    for v, rot in enumerate(rotations):
        rot = [int(d) for d in rot]
        for i, d in enumerate(rot):
            if not 0 <= d < m:
                raise MalformedRotation(f"dart {d} does not exist")
            if seen[d]:
                raise MalformedRotation(f"dart {d} repeated")
            if tail[d] != v:
                raise MalformedRotation(f"dart {d} listed at vertex {v} but leaves {tail[d]}")
            seen[d] = True
            rot_next[d] = rot[(i + 1) % len(rot)]
    if not seen.all():
        raise MalformedRotation(f"dart {int(np.flatnonzero(~seen)[0])} missing from rotations")
    inf_dart = 0 if infinite_face_dart is None else int(infinite_face_dart)
    if m and not 0 <= inf_dart < m:
        raise MalformedRotation("infinite_face_dart out of range")
    e = Embedding(n, tail, weight, rot_next, inf_dart)
    if validate and not e.euler_ok():
        raise NonPlanarRotation("rotation system fails the Euler check")
    return e


def triangulate_infinite(e: Embedding, keep_small: bool = False) -> Embedding:
    """Add ``inf``-weight chords until every face has three sides.

    The result's darts ``0 .. e.m - 1`` are the original darts; chords are
    appended and map to nothing.  ``chord_face`` on the result gives the
    original face each chord was drawn in.  Faces with fewer than three sides
    cannot be split and are kept as they are.
    """
    skip = np.zeros(e.num_faces, np.bool_)
    nt, rn, chord_face = K.triangulate_faces(e.n, e.tail, e.rot_next, e.face, e.num_faces, skip)
    w = np.full(nt.shape[0], INF)
    w[: e.m] = e.weight
    dmap = np.full(nt.shape[0], -1, np.int64)
    dmap[: e.m] = np.arange(e.m)
    t = Embedding(
        e.n, nt, w, rn, e.infinite_dart,
        parent=e, dart_map=dmap, vertex_map=np.arange(e.n, dtype=np.int64),
        proper_only=e.proper_only,
    )
    t.chord_face = chord_face
    t.base_darts = e.m
    return t


# ---------------------------------------------------------------- JSON I/O


def to_json_obj(e: Embedding) -> dict:
    def enc(x):
        if not math.isfinite(x):
            return None
        return int(x) if float(x).is_integer() else float(x)

    return {
        "n": e.n,
        "edges": [[u, v, enc(a), enc(b)] for u, v, a, b in e.edge_list()],
        "rotations": e.rotations(),
        "infinite_face_dart": e.infinite_dart if e.m else None,
    }


def dumps(e: Embedding) -> str:
    return json.dumps(to_json_obj(e), separators=(",", ":"))


def from_json_obj(obj, validate: bool = True) -> Embedding:
    if not isinstance(obj, dict):
        raise InputError("graph must be a JSON object")
    try:
        n = int(obj["n"])
        edges = obj["edges"]
        rotations = obj.get("rotations")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph object: {exc}") from exc
    if not isinstance(edges, list):
        raise InputError("edges must be a list")
    return build_embedding(n, edges, rotations, obj.get("infinite_face_dart"), validate=validate)


def loads(text: str, validate: bool = True) -> Embedding:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return from_json_obj(obj, validate)


def load(path, validate: bool = True) -> Embedding:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return loads(text, validate)
