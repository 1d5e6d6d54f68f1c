"""Brute-force references, written independently of the fast code paths."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cfn import Cut
from .embed import Embedding
from .errors import TooLarge
from .paths import DirectedCycle, crossing_number

INF = math.inf
MAX_ENUM = 20


def _adjacency(e: Embedding):
    out = [[] for _ in range(e.n)]
    for d in range(e.m):
        w = float(e.weight[d])
        if math.isfinite(w):
            out[int(e.tail[d])].append((d, int(e.head[d]), w))
    return out


def _dijkstra(adj, n, src, banned_edge=-1):
    dist = [INF] * n
    via = [-1] * n
    dist[src] = 0.0
    pq = [(0.0, src)]
    while pq:
        k, u = heapq.heappop(pq)
        if k > dist[u]:
            continue
        for d, x, w in adj[u]:
            if d >> 1 == banned_edge:
                continue
            nk = k + w
            if nk < dist[x]:
                dist[x] = nk
                via[x] = d
                heapq.heappush(pq, (nk, x))
    return dist, via


def brute_shortest_cycle(e: Embedding) -> DirectedCycle | None:
    """Minimum over darts ``d`` of ``w(d) + dist(head d, tail d)``.

    For a dual embedding the return path may not use the edge of ``d``, so a
    dart and its twin never form a cycle there.
    """
    adj = _adjacency(e)
    best = INF
    best_cycle = None
    for d in range(e.m):
        w = float(e.weight[d])
        if not math.isfinite(w) or w >= best:
            continue
        h, t = int(e.head[d]), int(e.tail[d])
        if h == t:
            best, best_cycle = w, [d]
            continue
        dist, via = _dijkstra(adj, e.n, h, d >> 1 if e.proper_only else -1)
        if w + dist[t] < best:
            best = w + dist[t]
            path = []
            x = t
            while x != h:
                path.append(via[x])
                x = int(e.tail[via[x]])
            best_cycle = [d] + path[::-1]
    if best_cycle is None:
        return None
    return DirectedCycle(tuple(best_cycle), best)


def brute_min_cut(e: Embedding) -> Cut:
    """Minimum of ``w(X -> Y)`` over all proper non-empty vertex subsets ``X``."""
    n = e.n
    if n > MAX_ENUM:
        raise TooLarge(f"{n} vertices exceed the enumeration guard of {MAX_ENUM}")
    if n < 2:
        raise TooLarge("need at least two vertices")
    masks = np.arange(1, (1 << n) - 1, dtype=np.int64)
    cap = np.zeros(masks.size)
    for d in range(e.m):
        w = float(e.weight[d])
        if not math.isfinite(w):
            continue
        t, h = int(e.tail[d]), int(e.head[d])
        hit = ((masks >> t) & 1).astype(bool) & ~((masks >> h) & 1).astype(bool)
        cap[hit] += w
    i = int(np.argmin(cap))
    mask = int(masks[i])
    xs = [v for v in range(n) if mask >> v & 1]
    ys = [v for v in range(n) if not mask >> v & 1]
    xset = set(xs)
    cross = [
        d for d in range(e.m)
        if int(e.tail[d]) in xset and int(e.head[d]) not in xset and math.isfinite(e.weight[d])
    ]
    return Cut(xs, ys, cross, float(cap[i]))


@dataclass
class AuditReport:
    ok: bool
    reason: str | None = None
    length: float = INF
    crossing: int | None = None


def audit_cycle(e: Embedding, c: Sequence[int], p: Sequence[int] | None = None,
                length: float | None = None) -> AuditReport:
    """Check that ``c`` is a closed walk of existing finite darts.

    Optionally checks its claimed ``length`` and that it crosses path ``p``
    exactly once.  Returns the first violation found.
    """
    c = [int(d) for d in c]
    if not c:
        return AuditReport(False, "empty cycle")
    for d in c:
        if not 0 <= d < e.m:
            return AuditReport(False, f"dart {d} does not exist")
        if not math.isfinite(e.weight[d]):
            return AuditReport(False, f"dart {d} is absent")
    if len(set(c)) != len(c):
        return AuditReport(False, "repeated dart")
    for a, b in zip(c, c[1:] + c[:1]):
        if e.head[a] != e.tail[b]:
            return AuditReport(False, f"not closed between darts {a} and {b}")
    total = float(sum(float(e.weight[d]) for d in c))
    if length is not None and total != length:
        return AuditReport(False, f"weight mismatch: {total} != {length}", total)
    cn = None
    if p is not None:
        cn = crossing_number(e, c, [int(d) for d in p])
        if abs(cn) != 1:
            return AuditReport(False, f"crossing number {cn}", total, cn)
    return AuditReport(True, None, total, cn)
