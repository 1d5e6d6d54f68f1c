"""Seeded instance generators.

All generators build straight-line drawings, derive the rotation system from
dart angles and pick a dart of the unbounded face as the infinite-face marker.
Weights are integers drawn uniformly from ``weight_range``.
"""

from __future__ import annotations

import math
import os

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import Delaunay

from .embed import Embedding, build_embedding
from .errors import InputError

KINDS = ("grid", "cylinder-grid", "random-planar-augmented")


def default_seed(seed=None) -> int:
    """Return ``seed``, else ``$PLANAR_SEED``, else 0."""
    if seed is not None:
        return int(seed)
    return int(os.environ.get("PLANAR_SEED", "0"))


def from_drawing(pos, edges, weights) -> Embedding:
    """Embedding of a straight-line drawing.

    Parameters
    ----------
    pos : (n, 2) array of coordinates
    edges : list of (u, v)
    weights : (len(edges), 2) array of forward/backward lengths
    """
    pos = np.asarray(pos, dtype=float)
    n = len(pos)
    rot: list[list[tuple[float, int]]] = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edges):
        dx, dy = pos[v] - pos[u]
        rot[u].append((math.atan2(dy, dx), 2 * k))
        rot[v].append((math.atan2(-dy, -dx), 2 * k + 1))
    rotations = [[d for _, d in sorted(r)] for r in rot]
    full = [(int(u), int(v), weights[k][0], weights[k][1]) for k, (u, v) in enumerate(edges)]
    e = build_embedding(n, full, rotations, 0, validate=False)
    if e.m:
        e.infinite_dart = _outer_dart(e, pos)
    return e


def _outer_dart(e: Embedding, pos) -> int:
    # the unbounded face is traversed counterclockwise (positive area)
    x, y = pos[e.tail, 0], pos[e.tail, 1]
    hx, hy = pos[e.head, 0], pos[e.head, 1]
    area = np.bincount(e.face, weights=x * hy - hx * y, minlength=e.num_faces)
    f = int(np.argmax(area))
    return int(np.flatnonzero(e.face == f)[0])


def _weights(rng, count, weight_range, both=True):
    lo, hi = weight_range
    if lo < 0 or hi < lo:
        raise InputError(f"bad weight range {weight_range}")
    w = rng.integers(lo, hi + 1, size=(count, 2)).astype(float)
    if not both:
        w[:, 1] = math.inf
    return w


def grid(side: int, seed=None, weight_range=(1, 1000), rows: int | None = None) -> Embedding:
    """Bidirected ``rows x side`` grid (square by default)."""
    if side < 2:
        raise InputError("grid side must be at least 2")
    rows = side if rows is None else rows
    rng = np.random.default_rng(default_seed(seed))
    pos = [(c, r) for r in range(rows) for c in range(side)]
    edges = []
    for r in range(rows):
        for c in range(side):
            v = r * side + c
            if c + 1 < side:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + side))
    return from_drawing(pos, edges, _weights(rng, len(edges), weight_range))


def cylinder_grid(side: int, seed=None, weight_range=(1, 1000)) -> Embedding:
    """``side`` concentric rings of ``side`` vertices joined by spokes."""
    if side < 3:
        raise InputError("cylinder-grid side must be at least 3")
    rng = np.random.default_rng(default_seed(seed))
    pos = []
    for ring in range(side):
        for j in range(side):
            a = 2 * math.pi * j / side
            pos.append(((ring + 1) * math.cos(a), (ring + 1) * math.sin(a)))
    edges = []
    for ring in range(side):
        for j in range(side):
            v = ring * side + j
            edges.append((v, ring * side + (j + 1) % side))
            if ring + 1 < side:
                edges.append((v, v + side))
    return from_drawing(pos, edges, _weights(rng, len(edges), weight_range))


def random_planar(
    n: int, seed=None, weight_range=(1, 1000), extra: float = 0.5, directed_prune: bool = False
) -> Embedding:
    """Random straight-line planar graph on ``n`` points.

    A random spanning tree of the Delaunay triangulation is kept and every
    other Delaunay edge survives with probability ``extra``.  All arcs start
    bidirected; ``directed_prune`` then deletes single directions in random
    order whenever strong connectivity survives.
    """
    if n < 2:
        raise InputError("need at least 2 vertices")
    rng = np.random.default_rng(default_seed(seed))
    if n == 2:
        pos = np.array([[0.0, 0.0], [1.0, 0.0]])
        cand = [(0, 1)]
    elif n == 3:
        pos = np.array([[0.0, 0.0], [1.0, 0.0], [0.3, 0.8]])
        cand = [(0, 1), (1, 2), (0, 2)]
    else:
        pos = rng.random((n, 2))
        tri = Delaunay(pos)
        s = set()
        for a, b, c in tri.simplices:
            for u, v in ((a, b), (b, c), (a, c)):
                s.add((min(u, v), max(u, v)))
        cand = sorted((int(u), int(v)) for u, v in s)
    order = rng.permutation(len(cand))
    par = list(range(n))

    def find(x):
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    keep = []
    rest = []
    for i in order:
        u, v = cand[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            par[ru] = rv
            keep.append(cand[i])
        else:
            rest.append(cand[i])
    keep += [uv for uv in rest if rng.random() < extra]
    keep.sort()
    w = _weights(rng, len(keep), weight_range)
    if directed_prune:
        _prune(n, keep, w, rng)
    return from_drawing(pos, keep, w)


def _prune(n, edges, w, rng):
    def strong(wt):
        rows, cols = [], []
        for k, (u, v) in enumerate(edges):
            if math.isfinite(wt[k][0]):
                rows.append(u)
                cols.append(v)
            if math.isfinite(wt[k][1]):
                rows.append(v)
                cols.append(u)
        g = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        return connected_components(g, directed=True, connection="strong")[0] == 1

    for k in rng.permutation(len(edges)):
        side = int(rng.integers(2))
        old = w[k][side]
        w[k][side] = math.inf
        if not strong(w):
            w[k][side] = old


def generate(kind: str, n: int, seed=None, weight_range=(1, 1000), directed_prune=False) -> Embedding:
    """Dispatch on generator name (see :data:`KINDS`)."""
    if kind == "grid":
        return grid(n, seed, weight_range)
    if kind == "cylinder-grid":
        return cylinder_grid(n, seed, weight_range)
    if kind == "random-planar-augmented":
        return random_planar(n, seed, weight_range, directed_prune=directed_prune)
    raise InputError(f"unknown generator {kind!r}")
