import math

import pytest

from planarcut import build_embedding
from planarcut import generators as G
from planarcut.errors import TooLarge
from planarcut.oracle import audit_cycle, brute_min_cut, brute_shortest_cycle

INF = math.inf


def test_two_vertices():
    assert brute_min_cut(build_embedding(2, [[0, 1, 3, 7]])).capacity == 3


def test_triangle():
    e = build_embedding(3, [[0, 1, 1, INF], [1, 2, 2, INF], [2, 0, 3, INF]])
    assert brute_min_cut(e).capacity == 1
    assert brute_shortest_cycle(e).length == 6


def test_guard():
    with pytest.raises(TooLarge):
        brute_min_cut(G.random_planar(21, 0))


def test_audit():
    e = build_embedding(3, [[0, 1, 1, INF], [1, 2, 2, INF], [2, 0, 3, INF]])
    assert audit_cycle(e, [0, 2, 4], length=6).ok
    bad = audit_cycle(e, [0, 3, 4])
    assert not bad.ok
    assert not audit_cycle(e, [0, 2, 4], length=5).ok
    assert not audit_cycle(e, []).ok
    assert not audit_cycle(e, [0, 2, 99]).ok
