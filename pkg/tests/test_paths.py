import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from planarcut import build_embedding
from planarcut import generators as G
from planarcut.errors import NotACycle, Unreachable
from planarcut.paths import (
    crossing_number,
    dijkstra,
    encloses,
    extract_path,
    face_parity,
    make_cycle,
    shortest_path,
)

from conftest import dart, grids, walk

INF = math.inf


def bellman_ford(e, s):
    dist = np.full(e.n, INF)
    dist[s] = 0.0
    for _ in range(e.n):
        cand = dist[e.tail] + e.weight
        new = dist.copy()
        np.minimum.at(new, e.head, cand)
        if np.array_equal(new, dist):
            break
        dist = new
    return dist


def test_triangle_distances(triangle):
    t = dijkstra(triangle, 0)
    assert t.dist.tolist() == [0, 1, 2]
    p = extract_path(triangle, t, 2)
    assert p.darts == (0, 2) and p.length == 2
    assert extract_path(triangle, t, 0).darts == ()


def test_tie_break_prefers_smaller_dart_sequence():
    # darts: a->b = 0, b->c = 2, a->c = 4
    e = build_embedding(3, [[0, 1, 1, INF], [1, 2, 1, INF], [0, 2, 2, INF]])
    assert shortest_path(e, 0, 2).darts == (0, 2)
    # direct edge listed first: a->c = 0
    e = build_embedding(3, [[0, 2, 2, INF], [0, 1, 1, INF], [1, 2, 1, INF]])
    assert shortest_path(e, 0, 2).darts == (0,)


def test_unreachable(triangle):
    e = build_embedding(2, [[0, 1, 1, INF]])
    t = dijkstra(e, 1)
    with pytest.raises(Unreachable):
        extract_path(e, t, 0)
    assert shortest_path(e, 1, 0) is None


def test_grid_against_bellman_ford():
    e = G.grid(10, 7, (1, 100))
    for s in (0, 37, 99):
        t = dijkstra(e, s)
        assert np.array_equal(t.dist, bellman_ford(e, s))
        for v in (5, 55, 98):
            assert extract_path(e, t, v).length == t.dist[v]


@given(grids(), st.integers(0, 1000))
def test_tree_is_deterministic_and_tight(e, k):
    s = k % e.n
    a, b = dijkstra(e, s), dijkstra(e, s)
    assert np.array_equal(a.parent, b.parent)
    for v in range(e.n):
        d = int(a.parent[v])
        if d >= 0:
            assert a.dist[v] == a.dist[e.tail[d]] + e.weight[d]


@given(st.integers(3, 7), st.integers(0, 10_000), st.data())
def test_selected_paths_share_whole_subpaths(side, seed, data):
    # tiny weight range forces many ties
    e = G.grid(side, seed, (1, 2))
    pick = st.integers(0, e.n - 1)
    paths = []
    for _ in range(4):
        s, t = data.draw(pick), data.draw(pick)
        p = shortest_path(e, s, t)
        assert p.darts == extract_path(e, dijkstra(e, s), t).darts
        paths.append(p)
    for p in paths:
        for q in paths:
            vp, vq = p.vertices(e), q.vertices(e)
            common = [x for x in vp if x in vq]
            for i, x in enumerate(common):
                for y in common[i + 1:]:
                    if vq.index(x) < vq.index(y):
                        sp = vp[vp.index(x): vp.index(y) + 1]
                        sq = vq[vq.index(x): vq.index(y) + 1]
                        assert sp == sq


# ---------------------------------------------------------------- crossings


def rc(r, c, side=9):
    return r * side + c


def test_disjoint_paths_do_not_cross():
    e = G.grid(6, 0)
    assert crossing_number(e, walk(e, [0, 1, 2]), walk(e, [30, 31, 32])) == 0


def test_three_crossings_same_direction():
    e = G.grid(9, 0)
    q = walk(e, [rc(4, c) for c in range(2, 7)])
    cells = (
        [(5, 3), (4, 3), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (4, 7), (5, 7),
         (5, 6), (5, 5), (5, 4), (4, 4), (3, 4), (2, 4), (2, 5), (2, 6), (2, 7),
         (2, 8), (3, 8), (4, 8), (5, 8), (6, 8), (6, 7), (6, 6), (6, 5), (5, 5),
         (4, 5), (3, 5)]
    )
    p = walk(e, [rc(r, c) for r, c in cells])
    # q runs along +x, so the left of q is +y (higher row); p keeps moving down
    assert crossing_number(e, p, q) == -3
    rq = [d ^ 1 for d in reversed(q)]
    assert crossing_number(e, p, rq) == 3
    # reversing p flips every crossing
    rp = [d ^ 1 for d in reversed(p)]
    assert crossing_number(e, rp, q) == 3


def touch_gadget():
    from planarcut.generators import from_drawing

    pos = [(0, 0), (1, 0), (2, 0), (0.5, 1), (1.5, 1)]
    edges = [(0, 1), (1, 2), (3, 1), (1, 4), (3, 4)]
    return from_drawing(pos, edges, [(1, 1)] * len(edges))


def test_touch_without_crossing():
    e = touch_gadget()
    q = walk(e, [0, 1, 2])
    p = walk(e, [3, 1, 4])
    assert crossing_number(e, p, q) == 0
    # running along q and leaving on the side it came from
    g = G.grid(9, 0)
    q = walk(g, [rc(4, c) for c in range(1, 7)])
    p = walk(g, [rc(5, 3), rc(4, 3), rc(4, 4), rc(5, 4)])
    assert crossing_number(g, p, q) == 0


def test_single_crossing_through_shared_run():
    g = G.grid(9, 0)
    q = walk(g, [rc(4, c) for c in range(1, 7)])
    p = walk(g, [rc(5, 3), rc(4, 3), rc(4, 4), rc(3, 4)])
    assert crossing_number(g, p, q) == -1


@given(grids(4, 7), st.data())
def test_crossing_antisymmetry(e, data):
    side = int(round(math.sqrt(e.n)))
    r = data.draw(st.integers(1, side - 2))
    q = walk(e, [r * side + c for c in range(side)])
    s = data.draw(st.integers(0, e.n - 1))
    t = data.draw(st.integers(0, e.n - 1))
    p = shortest_path(e, s, t).darts
    a = crossing_number(e, p, q)
    rp = [d ^ 1 for d in reversed(p)]
    assert crossing_number(e, rp, q) == -a
    # exchanging the sides of q is only defined away from its endpoints
    b = crossing_number(e, p, q, endpoints=False)
    rq = [d ^ 1 for d in reversed(q)]
    assert crossing_number(e, p, rq, endpoints=False) == -b


# ---------------------------------------------------------------- enclosure


def test_face_boundary_encloses_its_face():
    e = G.grid(4, 0)
    f = int(e.face[dart(e, 5, 6)])
    c = e.face_darts(f)
    assert encloses(e, c, f)
    assert not encloses(e, c, e.infinite_face)


def test_outer_boundary_encloses_everything():
    e = G.grid(5, 0)
    c = [d ^ 1 for d in reversed(e.face_darts(e.infinite_face))]
    par = face_parity(e, c)
    inner = [f for f in range(e.num_faces) if f != e.infinite_face]
    assert all(par[f] for f in inner)
    assert not par[e.infinite_face]


def test_figure_eight():
    from planarcut.generators import from_drawing

    pos = [(0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1)]
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    e = from_drawing(pos, edges, [(1, 1)] * 6)
    c = walk(e, [0, 1, 2, 0, 3, 4, 0])
    fa = int(e.face[dart(e, 0, 1)]) if e.face[dart(e, 0, 1)] != e.infinite_face else int(e.face[dart(e, 1, 0)])
    fb = int(e.face[dart(e, 0, 3)]) if e.face[dart(e, 0, 3)] != e.infinite_face else int(e.face[dart(e, 3, 0)])
    assert encloses(e, c, fa) and encloses(e, c, fb)
    assert not encloses(e, c, e.infinite_face)


@given(grids(3, 6), st.data())
def test_encloses_rotation_invariant(e, data):
    f = data.draw(st.integers(0, e.num_faces - 1))
    c = e.face_darts(f)
    k = data.draw(st.integers(0, len(c) - 1))
    rot = c[k:] + c[:k]
    assert np.array_equal(face_parity(e, c), face_parity(e, rot))
    for g in range(e.num_faces):
        assert encloses(e, c, g) == encloses(e, rot, g)


def test_make_cycle_rejects_open_walk(triangle):
    with pytest.raises(NotACycle):
        make_cycle(triangle, [0, 2])
    assert make_cycle(triangle, [0, 2, 4]).length == 3
