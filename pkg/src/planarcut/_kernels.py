"""Compiled inner loops.

Every function here works on flat arrays: darts ``d`` and ``d ^ 1`` are twins,
``tail[d]`` is the source vertex, ``rot_next[d]`` the next dart counterclockwise
around ``tail[d]`` and ``w[d]`` the dart length (``inf`` for an absent arc).
"""

import numpy as np
from numba import njit

INF = np.inf


# ---------------------------------------------------------------- heap


@njit(cache=True)
def _hpush(hk, hv, size, k, v):
    i = size
    while i > 0:
        p = (i - 1) >> 1
        if hk[p] <= k:
            break
        hk[i] = hk[p]
        hv[i] = hv[p]
        i = p
    hk[i] = k
    hv[i] = v
    return size + 1


@njit(cache=True)
def _hpop(hk, hv, size):
    k = hk[0]
    v = hv[0]
    size -= 1
    if size > 0:
        lk = hk[size]
        lv = hv[size]
        i = 0
        while True:
            c = 2 * i + 1
            if c >= size:
                break
            if c + 1 < size and hk[c + 1] < hk[c]:
                c += 1
            if hk[c] >= lk:
                break
            hk[i] = hk[c]
            hv[i] = hv[c]
            i = c
        hk[i] = lk
        hv[i] = lv
    return k, v, size


# ---------------------------------------------------------------- structure


@njit(cache=True)
def trace_faces(rot_next):
    """Label each dart with the face on its right; returns (face, count)."""
    m = rot_next.shape[0]
    face = np.full(m, -1, np.int64)
    nf = 0
    for d0 in range(m):
        if face[d0] >= 0:
            continue
        d = d0
        while face[d] < 0:
            face[d] = nf
            d = rot_next[d ^ 1]
        nf += 1
    return face, nf


@njit(cache=True)
def _find(par, x):
    r = x
    while par[r] != r:
        r = par[r]
    while par[x] != r:
        nx = par[x]
        par[x] = r
        x = nx
    return r


@njit(cache=True)
def vertex_components(n, tail):
    """Connected components of the skeleton (isolated vertices included)."""
    par = np.arange(n)
    m = tail.shape[0]
    for e in range(m // 2):
        a = _find(par, tail[2 * e])
        b = _find(par, tail[2 * e + 1])
        if a != b:
            par[a] = b
    comp = np.full(n, -1, np.int64)
    nc = 0
    for v in range(n):
        r = _find(par, v)
        if comp[r] < 0:
            comp[r] = nc
            nc += 1
        comp[v] = comp[r]
    return comp, nc


@njit(cache=True)
def out_csr(n, tail):
    """Outgoing darts grouped by tail, increasing dart id inside each group."""
    m = tail.shape[0]
    ptr = np.zeros(n + 1, np.int64)
    for d in range(m):
        ptr[tail[d] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    pos = ptr[:-1].copy()
    adj = np.empty(m, np.int64)
    for d in range(m):
        adj[pos[tail[d]]] = d
        pos[tail[d]] += 1
    return ptr, adj


# ---------------------------------------------------------------- shortest paths


@njit(cache=True)
def sssp(n, ptr, adj, head, w, src, dst, bound):
    """Dijkstra from ``src``.

    Stops once every vertex at distance ``<= dist[dst]`` is settled (when
    ``dst >= 0``) or when the frontier reaches ``bound``.  Unsettled vertices
    get distance ``inf``.
    """
    dist = np.full(n, INF)
    done = np.zeros(n, np.bool_)
    cap = adj.shape[0] + 2
    hk = np.empty(cap)
    hv = np.empty(cap, np.int64)
    dist[src] = 0.0
    size = _hpush(hk, hv, 0, 0.0, src)
    stop = INF
    while size > 0:
        k, u, size = _hpop(hk, hv, size)
        if done[u]:
            continue
        if k > stop or k >= bound:
            break
        done[u] = True
        if u == dst:
            stop = k
        for i in range(ptr[u], ptr[u + 1]):
            d = adj[i]
            wd = w[d]
            if wd == INF:
                continue
            x = head[d]
            nd = k + wd
            if nd < dist[x] and not done[x]:
                dist[x] = nd
                size = _hpush(hk, hv, size, nd, x)
    for v in range(n):
        if not done[v]:
            dist[v] = INF
    return dist, done


@njit(cache=True)
def lex_parents(n, ptr, adj, head, w, dist, done, src, dst):
    """Parent darts of the lexicographically least shortest paths from ``src``.

    Depth-first search over tight darts taken in increasing id; the first
    discovery of a vertex is along its lexicographically smallest shortest
    path.  With ``dst >= 0`` the search stops once ``dst`` is found.
    """
    parent = np.full(n, -1, np.int64)
    seen = np.zeros(n, np.bool_)
    sv = np.empty(n, np.int64)
    si = np.empty(n, np.int64)
    seen[src] = True
    sv[0] = src
    si[0] = ptr[src]
    sp = 1
    while sp > 0:
        u = sv[sp - 1]
        i = si[sp - 1]
        if i >= ptr[u + 1]:
            sp -= 1
            continue
        si[sp - 1] = i + 1
        d = adj[i]
        x = head[d]
        if seen[x] or not done[x] or w[d] == INF:
            continue
        if dist[u] + w[d] != dist[x]:
            continue
        seen[x] = True
        parent[x] = d
        if x == dst:
            break
        sv[sp] = x
        si[sp] = ptr[x]
        sp += 1
    return parent


@njit(cache=True)
def lex_path(n, ptr, adj, head, tail, w, src, dst):
    """Lexicographically least shortest ``src``-``dst`` path as a dart array."""
    dist, done = sssp(n, ptr, adj, head, w, src, dst, INF)
    if not done[dst]:
        return INF, np.empty(0, np.int64)
    if src == dst:
        return 0.0, np.empty(0, np.int64)
    parent = lex_parents(n, ptr, adj, head, w, dist, done, src, dst)
    k = 0
    x = dst
    while x != src:
        k += 1
        x = tail[parent[x]]
    out = np.empty(k, np.int64)
    x = dst
    while x != src:
        k -= 1
        out[k] = parent[x]
        x = tail[parent[x]]
    return dist[dst], out


@njit(cache=True)
def pair_distances(n, ptr, adj, head, w, srcs, dsts, bound):
    out = np.full(srcs.shape[0], INF)
    for j in range(srcs.shape[0]):
        if srcs[j] < 0 or dsts[j] < 0:
            continue
        dist, done = sssp(n, ptr, adj, head, w, srcs[j], dsts[j], bound)
        out[j] = dist[dsts[j]]
    return out


@njit(cache=True)
def bounded_pairs(n, ptr, adj, head, w, srcs, dsts, bound, budget):
    """``pair_distances`` below ``bound`` with a cap on total scan work.

    Returns (dist, ok); ``ok`` is False when more than ``budget`` darts were
    scanned, in which case ``dist`` is meaningless.
    """
    out = np.full(srcs.shape[0], INF)
    dist = np.full(n, INF)
    done = np.zeros(n, np.bool_)
    touched = np.empty(n, np.int64)
    cap = adj.shape[0] + 2
    hk = np.empty(cap)
    hv = np.empty(cap, np.int64)
    work = 0
    for j in range(srcs.shape[0]):
        s = srcs[j]
        t = dsts[j]
        if s < 0 or t < 0:
            continue
        nt = 0
        dist[s] = 0.0
        touched[nt] = s
        nt += 1
        size = _hpush(hk, hv, 0, 0.0, s)
        while size > 0:
            k, u, size = _hpop(hk, hv, size)
            if done[u]:
                continue
            if k >= bound:
                break
            done[u] = True
            if u == t:
                out[j] = k
                break
            work += ptr[u + 1] - ptr[u] + 1
            for i in range(ptr[u], ptr[u + 1]):
                d = adj[i]
                wd = w[d]
                if wd == INF:
                    continue
                x = head[d]
                nd = k + wd
                if nd < dist[x] and not done[x]:
                    if dist[x] == INF:
                        touched[nt] = x
                        nt += 1
                    dist[x] = nd
                    size = _hpush(hk, hv, size, nd, x)
        for i in range(nt):
            dist[touched[i]] = INF
            done[touched[i]] = False
        if work > budget:
            return out, False
    return out, True


@njit(cache=True)
def cycle_through(n, ptr, adj, head, w, x, bound):
    """Shortest proper cycle through vertex ``x`` shorter than ``bound``.

    Two-label Dijkstra: each vertex keeps its two best distances that start
    with different first darts, so a return dart never retraces the first
    dart of its own path.  Returns (length, darts); length is ``inf`` when
    nothing beats the bound.
    """
    m = adj.shape[0]
    cap = 3 * m + 4
    hk = np.empty(cap)
    hv = np.empty(cap, np.int64)
    ev = np.empty(cap, np.int64)
    el = np.empty(cap, np.int64)
    ep = np.empty(cap, np.int64)
    ed = np.empty(cap, np.int64)
    scnt = np.zeros(n, np.int64)
    slab = np.full(n, -1, np.int64)
    ne = 0
    size = 0
    best = bound
    best_e = -1
    best_d = -1
    for i in range(ptr[x], ptr[x + 1]):
        a = adj[i]
        wa = w[a]
        if wa == INF or wa >= best:
            continue
        y = head[a]
        if y == x:
            best = wa
            best_e = -1
            best_d = a
            continue
        ev[ne] = y
        el[ne] = a
        ep[ne] = -1
        ed[ne] = a
        size = _hpush(hk, hv, size, wa, ne)
        ne += 1
    while size > 0:
        k, e, size = _hpop(hk, hv, size)
        if k >= best:
            break
        v = ev[e]
        lab = el[e]
        if scnt[v] >= 2 or (scnt[v] == 1 and slab[v] == lab):
            continue
        if scnt[v] == 0:
            slab[v] = lab
        scnt[v] += 1
        for i in range(ptr[v], ptr[v + 1]):
            d = adj[i]
            wd = w[d]
            if wd == INF:
                continue
            nk = k + wd
            if nk >= best:
                continue
            y = head[d]
            if y == x:
                if d != (lab ^ 1):
                    best = nk
                    best_e = e
                    best_d = d
                continue
            if scnt[y] >= 2 or (scnt[y] == 1 and slab[y] == lab):
                continue
            if ne >= cap:
                continue
            ev[ne] = y
            el[ne] = lab
            ep[ne] = e
            ed[ne] = d
            size = _hpush(hk, hv, size, nk, ne)
            ne += 1
    if best_d < 0:
        return INF, np.empty(0, np.int64)
    k = 1
    e = best_e
    while e >= 0:
        k += 1
        e = ep[e]
    out = np.empty(k, np.int64)
    out[k - 1] = best_d
    e = best_e
    j = k - 2
    while e >= 0:
        out[j] = ed[e]
        j -= 1
        e = ep[e]
    return best, out


@njit(cache=True)
def shortest_proper_cycle(n, ptr, adj, head, w, bound):
    """Minimum of :func:`cycle_through` over all vertices."""
    best = bound
    cyc = np.empty(0, np.int64)
    for x in range(n):
        if ptr[x + 1] == ptr[x]:
            continue
        val, c = cycle_through(n, ptr, adj, head, w, x, best)
        if val < best:
            best = val
            cyc = c
    return best, cyc


# ---------------------------------------------------------------- reachability


@njit(cache=True)
def strong_components(n, ptr, adj, head, w):
    """Tarjan's algorithm over finite darts; returns (comp, count)."""
    index = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    onst = np.zeros(n, np.bool_)
    comp = np.full(n, -1, np.int64)
    st = np.empty(n, np.int64)
    csv = np.empty(n, np.int64)
    csi = np.empty(n, np.int64)
    top = 0
    idx = 0
    nc = 0
    for r in range(n):
        if index[r] >= 0:
            continue
        csv[0] = r
        csi[0] = ptr[r]
        cp = 1
        index[r] = idx
        low[r] = idx
        idx += 1
        st[top] = r
        top += 1
        onst[r] = True
        while cp > 0:
            u = csv[cp - 1]
            i = csi[cp - 1]
            if i < ptr[u + 1]:
                csi[cp - 1] = i + 1
                d = adj[i]
                if w[d] == INF:
                    continue
                x = head[d]
                if index[x] < 0:
                    index[x] = idx
                    low[x] = idx
                    idx += 1
                    st[top] = x
                    top += 1
                    onst[x] = True
                    csv[cp] = x
                    csi[cp] = ptr[x]
                    cp += 1
                elif onst[x] and index[x] < low[u]:
                    low[u] = index[x]
                continue
            if low[u] == index[u]:
                while True:
                    top -= 1
                    y = st[top]
                    onst[y] = False
                    comp[y] = nc
                    if y == u:
                        break
                nc += 1
            cp -= 1
            if cp > 0:
                p = csv[cp - 1]
                if low[u] < low[p]:
                    low[p] = low[u]
    return comp, nc


# ---------------------------------------------------------------- surgery


@njit(cache=True)
def edge_subgraph(n, tail, rot_next, keep_edge, keep_vertex):
    """Induced embedding on the kept edges.

    Vertices incident to a kept edge (or flagged in ``keep_vertex``) survive,
    relabelled in increasing order; kept edges keep their relative order.
    Returns (new_n, tail, rot_next, old_dart_of_new, old_vertex_of_new).
    """
    m = tail.shape[0]
    new_of_old = np.full(m, -1, np.int64)
    cnt = 0
    for e in range(m // 2):
        if keep_edge[e]:
            new_of_old[2 * e] = 2 * cnt
            new_of_old[2 * e + 1] = 2 * cnt + 1
            cnt += 1
    used = keep_vertex.copy()
    for d in range(m):
        if new_of_old[d] >= 0:
            used[tail[d]] = True
    vnew = np.full(n, -1, np.int64)
    nv = 0
    for v in range(n):
        if used[v]:
            vnew[v] = nv
            nv += 1
    vold = np.empty(nv, np.int64)
    for v in range(n):
        if vnew[v] >= 0:
            vold[vnew[v]] = v
    mm = 2 * cnt
    nt = np.empty(mm, np.int64)
    nr = np.empty(mm, np.int64)
    dold = np.empty(mm, np.int64)
    for d in range(m):
        nd = new_of_old[d]
        if nd >= 0:
            nt[nd] = vnew[tail[d]]
            dold[nd] = d
    seen = np.zeros(m, np.bool_)
    for d0 in range(m):
        if seen[d0]:
            continue
        first = -1
        prev = -1
        d = d0
        while not seen[d]:
            seen[d] = True
            nd = new_of_old[d]
            if nd >= 0:
                if first < 0:
                    first = nd
                else:
                    nr[prev] = nd
                prev = nd
            d = rot_next[d]
        if first >= 0:
            nr[prev] = first
    return nv, nt, nr, dold, vold


@njit(cache=True)
def prune_leaves(n, tail, protect):
    """Edge mask left after repeatedly deleting unprotected degree-one vertices."""
    m = tail.shape[0]
    ne = m // 2
    keep = np.ones(ne, np.bool_)
    deg = np.zeros(n, np.int64)
    for d in range(m):
        deg[tail[d]] += 1
    ptr = np.zeros(n + 1, np.int64)
    for d in range(m):
        ptr[tail[d] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    pos = ptr[:-1].copy()
    adj = np.empty(m, np.int64)
    for d in range(m):
        adj[pos[tail[d]]] = d
        pos[tail[d]] += 1
    q = np.empty(n, np.int64)
    qh = 0
    qt = 0
    for v in range(n):
        if deg[v] == 1 and not protect[v]:
            q[qt] = v
            qt += 1
    while qh < qt:
        v = q[qh]
        qh += 1
        if deg[v] != 1:
            continue
        for i in range(ptr[v], ptr[v + 1]):
            d = adj[i]
            if keep[d >> 1]:
                keep[d >> 1] = False
                deg[v] -= 1
                x = tail[d ^ 1]
                deg[x] -= 1
                if deg[x] == 1 and not protect[x]:
                    q[qt] = x
                    qt += 1
                break
    return keep


@njit(cache=True)
def contract_paths(n, tail, rot_next, w, protect):
    """Replace maximal chains through unprotected degree-two vertices by edges.

    Returns (new_n, tail, rot_next, w, exp_ptr, exp_idx, old_vertex_of_new);
    ``exp_idx[exp_ptr[d]:exp_ptr[d + 1]]`` lists the old darts merged into
    new dart ``d`` in walk order.
    """
    m = tail.shape[0]
    deg = np.zeros(n, np.int64)
    for d in range(m):
        deg[tail[d]] += 1
    removable = np.zeros(n, np.bool_)
    for v in range(n):
        if deg[v] == 2 and not protect[v]:
            removable[v] = True
    # one dart out of each vertex
    some = np.full(n, -1, np.int64)
    for d in range(m):
        some[tail[d]] = d
    for v in range(n):
        if removable[v]:
            d = some[v]
            if rot_next[d] == d ^ 1:
                removable[v] = False
    # chains that close on themselves keep one vertex
    seen = np.zeros(n, np.bool_)
    for v in range(n):
        if not removable[v] or seen[v]:
            continue
        d = some[v]
        x = tail[d ^ 1]
        closed = True
        seen[v] = True
        while x != v:
            if not removable[x] or seen[x]:
                closed = False
                break
            seen[x] = True
            nd = rot_next[d ^ 1]
            d = nd
            x = tail[d ^ 1]
        if closed:
            removable[v] = False
    newd = np.full(m, -1, np.int64)
    cnt = 0
    for d in range(m):
        if not removable[tail[d]] and newd[d] < 0:
            x = tail[d ^ 1]
            last = d
            while removable[x]:
                last = rot_next[last ^ 1]
                x = tail[last ^ 1]
            newd[d] = 2 * cnt
            newd[last ^ 1] = 2 * cnt + 1
            cnt += 1
    mm = 2 * cnt
    vnew = np.full(n, -1, np.int64)
    nv = 0
    for v in range(n):
        if not removable[v]:
            vnew[v] = nv
            nv += 1
    vold = np.empty(nv, np.int64)
    for v in range(n):
        if vnew[v] >= 0:
            vold[vnew[v]] = v
    nt = np.empty(mm, np.int64)
    nr = np.empty(mm, np.int64)
    nw = np.zeros(mm)
    lens = np.zeros(mm, np.int64)
    starts = np.empty(mm, np.int64)
    for d in range(m):
        nd = newd[d]
        if nd >= 0:
            nt[nd] = vnew[tail[d]]
            nr[nd] = newd[rot_next[d]]
            starts[nd] = d
            k = 1
            s = w[d]
            x = tail[d ^ 1]
            last = d
            while removable[x]:
                last = rot_next[last ^ 1]
                s += w[last]
                k += 1
                x = tail[last ^ 1]
            nw[nd] = s
            lens[nd] = k
    eptr = np.zeros(mm + 1, np.int64)
    for nd in range(mm):
        eptr[nd + 1] = eptr[nd] + lens[nd]
    eidx = np.empty(eptr[mm], np.int64)
    for nd in range(mm):
        j = eptr[nd]
        d = starts[nd]
        eidx[j] = d
        x = tail[d ^ 1]
        last = d
        while removable[x]:
            last = rot_next[last ^ 1]
            j += 1
            eidx[j] = last
            x = tail[last ^ 1]
    return nv, nt, nr, nw, eptr, eidx, vold


@njit(cache=True)
def triangulate_faces(n, tail, rot_next, face, nf, skip_face):
    """Ear-clip every face with more than three sides by adding chords.

    Faces flagged in ``skip_face`` are left alone.  Returns the extended
    (tail, rot_next) plus, for each new edge, the face it was drawn in.
    """
    m = tail.shape[0]
    sizes = np.zeros(nf, np.int64)
    for d in range(m):
        sizes[face[d]] += 1
    extra = 0
    for f in range(nf):
        if sizes[f] > 3 and not skip_face[f]:
            extra += sizes[f] - 3
    mm = m + 2 * extra
    nt = np.empty(mm, np.int64)
    rn = np.empty(mm, np.int64)
    nt[:m] = tail
    rn[:m] = rot_next
    chord_face = np.empty(extra, np.int64)
    # face walks from the original rotation
    start = np.full(nf, -1, np.int64)
    for d in range(m):
        if start[face[d]] < 0:
            start[face[d]] = d
    nxt_d = np.empty(m, np.int64)
    for d in range(m):
        nxt_d[d] = rot_next[d ^ 1]
    ec = m // 2
    maxk = 0
    for f in range(nf):
        if sizes[f] > maxk:
            maxk = sizes[f]
    L = np.empty(2 * maxk + 2, np.int64)
    nx = np.empty(2 * maxk + 2, np.int64)
    pv = np.empty(2 * maxk + 2, np.int64)
    for f in range(nf):
        k = sizes[f]
        if k <= 3 or skip_face[f]:
            continue
        d = start[f]
        for i in range(k):
            L[i] = d
            nx[i] = i + 1
            pv[i] = i - 1
            d = nxt_d[d]
        nx[k - 1] = 0
        pv[0] = k - 1
        slots = k
        cur = 0
        count = k
        stall = 0
        while count > 3:
            d1 = L[cur]
            p2 = nx[cur]
            d2 = L[p2]
            vj = nt[d1]
            vj2 = nt[d2 ^ 1]
            if vj == vj2:
                cur = p2
                stall += 1
                if stall > count:
                    raise ValueError("cannot triangulate face")
                continue
            stall = 0
            c = 2 * ec
            ec += 1
            chord_face[(c - m) // 2] = f
            nt[c] = vj
            nt[c + 1] = vj2
            y = L[pv[cur]] ^ 1
            rn[c] = rn[y]
            rn[y] = c
            y2 = d2 ^ 1
            rn[c + 1] = rn[y2]
            rn[y2] = c + 1
            p = slots
            slots += 1
            L[p] = c
            a = pv[cur]
            b = nx[p2]
            nx[a] = p
            pv[p] = a
            nx[p] = b
            pv[b] = p
            count -= 1
            cur = p
    return nt, rn, chord_face


# ---------------------------------------------------------------- separator


@njit(cache=True)
def fundamental_cycle_cut(tail, face, nf, parent, fweight, root_face):
    """Pick the non-tree edge whose fundamental cycle best balances face weight.

    ``parent`` holds the tree dart entering each vertex (-1 at the root).
    Returns (edge, inside_face_mask, inside_weight); ties go to the smallest
    edge id.
    """
    m = tail.shape[0]
    ne = m // 2
    n = parent.shape[0]
    intree = np.zeros(ne, np.bool_)
    for v in range(n):
        if parent[v] >= 0:
            intree[parent[v] >> 1] = True
    fptr = np.zeros(nf + 1, np.int64)
    for e in range(ne):
        if not intree[e]:
            fptr[face[2 * e] + 1] += 1
            fptr[face[2 * e + 1] + 1] += 1
    for f in range(nf):
        fptr[f + 1] += fptr[f]
    pos = fptr[:-1].copy()
    fadj = np.empty(fptr[nf], np.int64)
    for e in range(ne):
        if not intree[e]:
            a = face[2 * e]
            b = face[2 * e + 1]
            fadj[pos[a]] = e
            pos[a] += 1
            fadj[pos[b]] = e
            pos[b] += 1
    # iterative dfs for subtree sums and euler intervals
    pe = np.full(nf, -1, np.int64)
    tin = np.full(nf, -1, np.int64)
    tout = np.full(nf, -1, np.int64)
    sub = fweight.copy()
    sv = np.empty(nf, np.int64)
    si = np.empty(nf, np.int64)
    sv[0] = root_face
    si[0] = fptr[root_face]
    sp = 1
    t = 0
    tin[root_face] = t
    t += 1
    while sp > 0:
        g = sv[sp - 1]
        i = si[sp - 1]
        if i < fptr[g + 1]:
            si[sp - 1] = i + 1
            e = fadj[i]
            if e == pe[g]:
                continue
            h = face[2 * e]
            if h == g:
                h = face[2 * e + 1]
            if tin[h] >= 0:
                continue
            pe[h] = e
            tin[h] = t
            t += 1
            sv[sp] = h
            si[sp] = fptr[h]
            sp += 1
        else:
            tout[g] = t
            sp -= 1
            if sp > 0:
                sub[sv[sp - 1]] += sub[g]
    total = sub[root_face]
    best = INF
    beste = -1
    bestg = -1
    for g in range(nf):
        if g == root_face or pe[g] < 0:
            continue
        s = sub[g]
        val = max(s, total - s)
        if val < best or (val == best and pe[g] < beste):
            best = val
            beste = pe[g]
            bestg = g
    inside = np.zeros(nf, np.bool_)
    if bestg >= 0:
        for f in range(nf):
            if tin[f] >= tin[bestg] and tin[f] < tout[bestg]:
                inside[f] = True
        return beste, inside, sub[bestg]
    return -1, inside, 0.0


# ---------------------------------------------------------------- reif split


@njit(cache=True)
def classify_sides(tail, face, nf, outer_face, on_mid, tag, mid):
    """Assign every inner face to the low or high side of a separator path.

    Inner faces are grouped by adjacency across non-separator edges; each
    group takes its side from the tag of an adjacent outer dart.  Returns
    (low_edge_mask, high_edge_mask, face_side, conflicts) where face_side is
    0 or 1, 2 for undecided groups and -1 for outer faces.
    """
    m = tail.shape[0]
    ne = m // 2
    par = np.arange(nf)
    for e in range(ne):
        if on_mid[e]:
            continue
        a = face[2 * e]
        b = face[2 * e + 1]
        if outer_face[a] or outer_face[b]:
            continue
        ra = _find(par, a)
        rb = _find(par, b)
        if ra != rb:
            par[ra] = rb
    side = np.full(nf, -1, np.int64)
    conflicts = 0
    for d in range(m):
        if on_mid[d >> 1]:
            continue
        if outer_face[face[d]] and not outer_face[face[d ^ 1]]:
            t = tag[d]
            if t != t:
                continue
            s = 0 if t < mid else 1
            r = _find(par, face[d ^ 1])
            if side[r] < 0:
                side[r] = s
            elif side[r] != s:
                side[r] = 2
                conflicts += 1
    fs = np.full(nf, -1, np.int64)
    for f in range(nf):
        if not outer_face[f]:
            s = side[_find(par, f)]
            fs[f] = 2 if s < 0 else s
    low = np.zeros(ne, np.bool_)
    high = np.zeros(ne, np.bool_)
    for e in range(ne):
        if on_mid[e]:
            low[e] = True
            high[e] = True
            continue
        a = fs[face[2 * e]]
        b = fs[face[2 * e + 1]]
        if a == 0 or b == 0 or a == 2 or b == 2:
            low[e] = True
        if a == 1 or b == 1 or a == 2 or b == 2:
            high[e] = True
        if a < 0 and b < 0:
            t1 = tag[2 * e]
            t2 = tag[2 * e + 1]
            if t1 == t1 and t2 == t2 and (t1 < mid) == (t2 < mid):
                if t1 < mid:
                    low[e] = True
                else:
                    high[e] = True
            else:
                low[e] = True
                high[e] = True
    return low, high, fs, conflicts


@njit(cache=True)
def face_parity(face, nf, odd_edge, root):
    """Parity of crossings with the odd edges along dual paths from ``root``."""
    m = face.shape[0]
    fptr = np.zeros(nf + 1, np.int64)
    for d in range(m):
        fptr[face[d] + 1] += 1
    for f in range(nf):
        fptr[f + 1] += fptr[f]
    pos = fptr[:-1].copy()
    fd = np.empty(m, np.int64)
    for d in range(m):
        fd[pos[face[d]]] = d
        pos[face[d]] += 1
    par = np.full(nf, -1, np.int64)
    q = np.empty(nf, np.int64)
    par[root] = 0
    q[0] = root
    qh = 0
    qt = 1
    while qh < qt:
        g = q[qh]
        qh += 1
        for i in range(fptr[g], fptr[g + 1]):
            d = fd[i]
            h = face[d ^ 1]
            if par[h] < 0:
                par[h] = par[g] ^ (1 if odd_edge[d >> 1] else 0)
                q[qt] = h
                qt += 1
    return par


@njit(cache=True)
def incise_path(n, tail, rot_next, P, x0, xk):
    """Cut the embedding open along the simple path ``P``.

    Every path vertex ``p_i`` keeps its id for the left clone and gets the
    right clone ``n + i``.  Off-path darts are sorted into left and right by
    their position in the rotation; at the ends the corners clockwise of
    ``x0`` and ``xk`` stand in for the missing path dart.  Path edges are
    doubled (left copy first).  Returns (tail, rot_next, old_dart_of_new,
    left_edge_of_step, right_edge_of_step); ``-1`` flags a repeated vertex.
    """
    m = tail.shape[0]
    k = P.shape[0]
    pidx = np.full(n, -1, np.int64)
    verts = np.empty(k + 1, np.int64)
    for i in range(k):
        verts[i] = tail[P[i]]
    verts[k] = tail[P[k - 1] ^ 1]
    for i in range(k + 1):
        if pidx[verts[i]] >= 0:
            return (np.empty(0, np.int64), np.empty(0, np.int64), np.empty(0, np.int64),
                    np.full(1, -1, np.int64), np.full(1, -1, np.int64))
        pidx[verts[i]] = i
    step = np.full(m // 2, -1, np.int64)
    for i in range(k):
        step[P[i] >> 1] = i
    side = np.zeros(m, np.int64)
    for i in range(k + 1):
        if i < k:
            b = P[i]
            stop1 = (P[i - 1] ^ 1) if i > 0 else x0
            d = rot_next[b]
            s = 0
            while d != b:
                if d == stop1 and i > 0:
                    s = 1
                    d = rot_next[d]
                    continue
                if d == stop1:
                    s = 1
                side[d] = s
                d = rot_next[d]
        else:
            t = P[k - 1] ^ 1
            d = rot_next[t]
            s = 1
            while d != t:
                if d == xk:
                    s = 0
                side[d] = s
                d = rot_next[d]
    ne = m // 2 + k
    mm = 2 * ne
    nt = np.empty(mm, np.int64)
    dold = np.empty(mm, np.int64)
    newd = np.full(m, -1, np.int64)
    left_e = np.empty(k, np.int64)
    right_e = np.empty(k, np.int64)
    c = 0
    for e in range(m // 2):
        i = step[e]
        if i < 0:
            for h in range(2):
                d = 2 * e + h
                v = tail[d]
                nv = v
                if pidx[v] >= 0 and side[d] == 1:
                    nv = n + pidx[v]
                nt[2 * c + h] = nv
                dold[2 * c + h] = d
                newd[d] = 2 * c + h
            c += 1
        else:
            for cp in range(2):
                for h in range(2):
                    d = 2 * e + h
                    v = tail[d]
                    nt[2 * c + h] = v if cp == 0 else n + pidx[v]
                    dold[2 * c + h] = d
                if cp == 0:
                    left_e[i] = c
                else:
                    right_e[i] = c
                c += 1
    rn = np.empty(mm, np.int64)
    for d in range(m):
        if pidx[tail[d]] < 0:
            rn[newd[d]] = newd[rot_next[d]]
    buf0 = np.empty(m + 2, np.int64)
    buf1 = np.empty(m + 2, np.int64)
    for i in range(k + 1):
        n0 = 0
        n1 = 0
        b0 = -1
        b1 = -1
        t0 = -1
        t1 = -1
        if i < k:
            b = P[i]
            b0 = 2 * left_e[i] + (b & 1)
            b1 = 2 * right_e[i] + (b & 1)
        if i > 0:
            t = P[i - 1] ^ 1
            t0 = 2 * left_e[i - 1] + (t & 1)
            t1 = 2 * right_e[i - 1] + (t & 1)
        if i < k:
            buf0[n0] = b0
            n0 += 1
            d = rot_next[P[i]]
            ref = P[i]
        else:
            d = rot_next[P[k - 1] ^ 1]
            ref = P[k - 1] ^ 1
            buf1[n1] = t1
            n1 += 1
        # walk the rotation once, dispatching each dart to its clone
        while d != ref:
            if i > 0 and i < k and d == (P[i - 1] ^ 1):
                buf1[n1] = t1
                n1 += 1
            elif side[d] == 0:
                buf0[n0] = newd[d]
                n0 += 1
            else:
                buf1[n1] = newd[d]
                n1 += 1
            d = rot_next[d]
        if i < k:
            if i > 0:
                buf0[n0] = t0
                n0 += 1
            buf1[n1] = b1
            n1 += 1
        else:
            buf0[n0] = t0
            n0 += 1
        for j in range(n0):
            rn[buf0[j]] = buf0[(j + 1) % n0]
        for j in range(n1):
            rn[buf1[j]] = buf1[(j + 1) % n1]
    return nt, rn, dold, left_e, right_e
