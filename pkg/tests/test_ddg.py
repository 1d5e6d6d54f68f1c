import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from planarcut import generators as G
from planarcut.ddg import build_ddg, build_r_division, ddg_distance, piece_embedding
from planarcut.errors import BoundsUnachievable, NotBoundary
from planarcut.paths import dijkstra

INF = math.inf


def path_graph(n, w=None):
    pos = [(i, 0) for i in range(n)]
    w = w or [(i + 1, 10 * (i + 1)) for i in range(n - 1)]
    return G.from_drawing(pos, [(i, i + 1) for i in range(n - 1)], w)


def check_division(e, rd):
    assert not rd.violations(e.n)
    seen = np.concatenate([p.edges for p in rd.pieces]) if rd.pieces else np.empty(0)
    assert sorted(seen.tolist()) == list(range(e.num_edges))
    count = np.zeros(e.n, int)
    for p in rd.pieces:
        count[p.vertices] += 1
    assert np.array_equal(count >= 2, rd.is_boundary)


def test_tiny_graph_one_piece():
    e = G.grid(2, 0)
    rd = build_r_division(e, 4)
    assert len(rd.pieces) == 1 and rd.boundary_vertices.size == 0
    d = build_ddg(e, rd)
    assert d.vertex_total == 0


def test_r_equal_n_one_piece():
    e = G.grid(32, 0)
    rd = build_r_division(e, e.n)
    assert len(rd.pieces) == 1


def test_grid_32_r64():
    e = G.grid(32, 0)
    rd = build_r_division(e, 64)
    check_division(e, rd)


def test_path_split_at_middle():
    e = path_graph(7)
    rd = build_r_division(e, 4)
    check_division(e, rd)
    d = build_ddg(e, rd)
    B = rd.boundary_vertices.tolist()
    full = {u: dijkstra(e, u).dist for u in B}
    for b, mat in zip(d.boundary, d.dist):
        for i, u in enumerate(b):
            for j, v in enumerate(b):
                # only one route inside a piece of a path: the prefix/suffix sum
                assert mat[i, j] == full[int(u)][int(v)]
    for u in B:
        assert ddg_distance(d, u, u) == 0


def test_ddg_weights_match_restricted_dijkstra():
    e = G.grid(16, 2)
    rd = build_r_division(e, 16)
    d = build_ddg(e, rd)
    for piece, b, mat in zip(rd.pieces, d.boundary, d.dist):
        sub = piece_embedding(e, piece)
        for i, u in enumerate(b):
            lu = int(np.flatnonzero(sub.vertex_map == u)[0])
            dist = dijkstra(sub, lu).dist
            for j, v in enumerate(b):
                lv = int(np.flatnonzero(sub.vertex_map == v)[0])
                assert mat[i, j] == dist[lv]
        off = mat[~np.eye(b.size, dtype=bool)]
        assert np.all(off >= 0)
        # triangle inequality inside each clique
        for k in range(b.size):
            assert np.all(mat <= mat[:, [k]] + mat[[k], :])


@pytest.mark.parametrize("r", [16, 64])
def test_sampled_pairs(r):
    e = G.grid(16, 5)
    rd = build_r_division(e, r)
    d = build_ddg(e, rd)
    B = rd.boundary_vertices
    rng = np.random.default_rng(r)
    for _ in range(100):
        u, v = (int(x) for x in rng.choice(B, 2))
        assert ddg_distance(d, u, v) == dijkstra(e, u).dist[v]


def test_not_boundary():
    e = G.grid(8, 0)
    rd = build_r_division(e, 16)
    d = build_ddg(e, rd)
    inner = int(np.flatnonzero(~rd.is_boundary)[0])
    with pytest.raises(NotBoundary):
        ddg_distance(d, inner, int(rd.boundary_vertices[0]))


def test_bounds_unachievable():
    with pytest.raises(BoundsUnachievable):
        build_r_division(G.grid(16, 0), 16, c1=40, c2=0.1)


@settings(max_examples=15)
@given(st.sampled_from(["grid", "cylinder-grid", "random-planar-augmented"]),
       st.sampled_from([16, 64, 256]), st.integers(0, 1000))
def test_bounds_on_generators(kind, r, seed):
    n = {"grid": 24, "cylinder-grid": 20, "random-planar-augmented": 500}[kind]
    e = G.generate(kind, n, seed)
    check_division(e, build_r_division(e, r))


@settings(max_examples=10)
@given(st.integers(0, 1000), st.integers(2, 9))
def test_scaling(seed, k):
    e = G.grid(10, seed, (1, 50))
    rd = build_r_division(e, 16)
    d1 = build_ddg(e, rd)
    d2 = build_ddg(e.reweighted(e.weight * k), rd)
    for a, b in zip(d1.dist, d2.dist):
        assert np.array_equal(a * k, b)
