import math
import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from planarcut import generators as G

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


def dart(e, u, v) -> int:
    """Dart from ``u`` to ``v`` (first match)."""
    hit = np.flatnonzero((e.tail == u) & (e.head == v))
    assert hit.size, f"no dart {u}->{v}"
    return int(hit[0])


def walk(e, verts) -> list[int]:
    return [dart(e, a, b) for a, b in zip(verts, verts[1:])]


@st.composite
def small_graphs(draw, max_n=9, directed=True):
    """Seeded strongly connected planar graphs with 3..max_n vertices."""
    n = draw(st.integers(3, max_n))
    seed = draw(st.integers(0, 10_000))
    prune = directed and draw(st.booleans())
    return G.random_planar(n, seed, (1, 20), directed_prune=prune)


@st.composite
def grids(draw, lo=3, hi=8):
    side = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 10_000))
    return G.grid(side, seed, (1, 50))


@pytest.fixture
def triangle():
    from planarcut import build_embedding
    return build_embedding(3, [[0, 1, 1, math.inf], [1, 2, 1, math.inf], [2, 0, 1, math.inf]])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
