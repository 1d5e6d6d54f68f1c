import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from planarcut import build_embedding, dual, triangulate_infinite
from planarcut import generators as G
from planarcut.embed import dumps, from_json_obj, loads, to_json_obj
from planarcut.errors import (
    InputError,
    InvalidEdge,
    MalformedRotation,
    NegativeWeight,
    NonPlanarRotation,
)

from conftest import small_graphs

INF = math.inf


def test_directed_triangle(triangle):
    e = triangle
    assert (e.n, e.num_edges, e.num_faces) == (3, 3, 2)
    assert e.euler_ok()
    assert e.infinite_face == e.face[0]


def test_single_edge():
    e = build_embedding(2, [[0, 1, 2, 5]])
    assert e.num_faces == 1
    assert e.n - e.num_edges + e.num_faces == 2
    assert e.weight.tolist() == [2, 5]


def test_twins_and_face_partition():
    e = G.grid(5, 3)
    d = np.arange(e.m)
    assert np.all((d ^ 1) ^ 1 == d)
    assert np.all(e.head == e.tail[d ^ 1])
    assert e.face_sizes().sum() == e.m
    # next(d) = rotation successor of twin(d)
    nxt = e.rot_next[d ^ 1]
    assert np.all(e.face[nxt] == e.face)


def k5_embedding():
    edges = [[u, v, 1, 1] for u, v in itertools.combinations(range(5), 2)]
    return build_embedding(5, edges, rotations=None, validate=False)


def test_k5_rejected():
    with pytest.raises(NonPlanarRotation):
        edges = [[u, v, 1, 1] for u, v in itertools.combinations(range(5), 2)]
        build_embedding(5, edges)
    assert not k5_embedding().euler_ok()


def test_k33_rejected():
    edges = [[u, v, 1, 1] for u in range(3) for v in range(3, 6)]
    with pytest.raises(NonPlanarRotation):
        build_embedding(6, edges)


def test_malformed_rotation():
    with pytest.raises(MalformedRotation):
        build_embedding(3, [[0, 1, 1, 1], [1, 2, 1, 1]], rotations=[[0], [1], [3]])
    with pytest.raises(MalformedRotation):
        build_embedding(3, [[0, 1, 1, 1], [1, 2, 1, 1]], rotations=[[0], [1, 1], [3]])


def test_bad_weights_and_edges():
    with pytest.raises(NegativeWeight):
        build_embedding(2, [[0, 1, -1, 1]])
    with pytest.raises(InvalidEdge):
        build_embedding(2, [[0, 5, 1, 1]])
    with pytest.raises(InvalidEdge):
        build_embedding(2, [[1, 1, 1, 1]])


def test_dual_of_triangle(triangle):
    D = dual(triangle)
    assert D.n == 2 and D.m == 6
    fin = np.isfinite(D.weight)
    assert fin.sum() == 3
    inner = 1 - triangle.infinite_face
    assert set(D.tail[fin].tolist()) == {inner}
    assert set(D.head[fin].tolist()) == {triangle.infinite_face}
    assert np.all(D.weight[fin] == 1)
    assert np.all(np.isinf(D.weight[~fin]))


def test_dual_of_single_edge():
    D = dual(build_embedding(2, [[0, 1, 2, 5]]))
    assert D.n == 1
    assert np.all(D.tail == D.head)


def test_dual_involution_on_four_cycle():
    e = build_embedding(4, [[0, 1, 1, 2], [1, 2, 3, 4], [2, 3, 5, 6], [3, 0, 7, 8]])
    dd = dual(dual(e))
    assert dd.n == e.n and dd.m == e.m
    # darts come back reversed (transpose), weights kept per dart
    assert np.array_equal(dd.tail, e.head)
    assert np.array_equal(dd.weight, e.weight)
    assert dd.num_faces == e.num_faces


@given(small_graphs())
def test_dual_counts_and_mass(e):
    D = dual(e)
    assert D.m == e.m and D.n == e.num_faces
    assert D.total_weight() == e.total_weight()
    assert D.euler_ok()


def test_triangulate_square():
    e = build_embedding(4, [[0, 1, 1, 1], [1, 2, 1, 1], [2, 3, 1, 1], [3, 0, 1, 1]])
    t = triangulate_infinite(e)
    assert t.num_edges == 4 + 2  # one chord in each of the two square faces
    assert np.all(t.face_sizes() == 3)
    assert np.all(np.isinf(t.weight[e.m:]))
    assert np.array_equal(t.dart_map[: e.m], np.arange(e.m))


def test_triangulate_idempotent():
    t = triangulate_infinite(G.grid(4, 0))
    t2 = triangulate_infinite(t)
    assert t2.m == t.m


def test_triangulate_grid_chord_count():
    e = G.grid(3, 0)
    sizes = e.face_sizes()
    t = triangulate_infinite(e)
    assert t.num_edges - e.num_edges == int((sizes - 3).sum())
    assert np.all(t.face_sizes() == 3)
    assert t.euler_ok()


@given(small_graphs())
def test_generator_outputs_valid(e):
    assert e.euler_ok()
    assert np.all(e.face_sizes() >= 1)


def test_json_round_trip():
    e = G.random_planar(12, 4, directed_prune=True)
    text = dumps(e)
    e2 = loads(text)
    assert dumps(e2) == text
    assert from_json_obj(to_json_obj(e)).num_faces == e.num_faces
    assert any(w is None for row in to_json_obj(e)["edges"] for w in row[2:])


def test_json_errors():
    with pytest.raises(InputError):
        loads("[1, 2")
    with pytest.raises(InputError):
        loads("[]")
    with pytest.raises(InputError):
        loads('{"edges": []}')
