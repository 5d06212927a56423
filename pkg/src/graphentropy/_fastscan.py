"""Compiled kernels for the heavy exhaustive scans.

Three workloads need to run millions of breadth-first searches on one core:
the closed-form profile oracle over every path-plus-clique parameter choice
up to order 200, bulk transmission/eccentricity profiles over all trees of
an order, and the scan of every labeled connected graph on up to 8
vertices. The kernels here keep those scans within a few minutes. They are
plain BFS implementations (bitset-based for the dense graphs) and are
themselves gated against the pure-Python BFS in the test suite.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_S56 = np.uint64(56)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True)
def _all_source_sigma(adj, n, words, seen, acc, frontier, nxt, sigma_out):
    """BFS from every source over bitset adjacency rows.

    Fills sigma_out with per-vertex transmissions; returns the number of
    sources that failed to reach all n vertices (0 for a connected graph).
    """
    bad = 0
    for s in range(n):
        for w in range(words):
            seen[w] = np.uint64(0)
        seen[s >> 6] = _U1 << np.uint64(s & 63)
        frontier[0] = s
        fcount = 1
        reached = 1
        total = 0
        t = 0
        while fcount > 0:
            t += 1
            for w in range(words):
                acc[w] = np.uint64(0)
            for i in range(fcount):
                r = frontier[i]
                for w in range(words):
                    acc[w] |= adj[r, w]
            newcount = 0
            for w in range(words):
                fresh = acc[w] & ~seen[w]
                seen[w] |= fresh
                base = w << 6
                while fresh != np.uint64(0):
                    low = fresh & (~fresh + _U1)
                    nxt[newcount] = base + _popcount(low - _U1)
                    newcount += 1
                    fresh &= fresh - _U1
            if newcount == 0:
                break
            total += t * newcount
            reached += newcount
            for i in range(newcount):
                frontier[i] = nxt[i]
            fcount = newcount
        sigma_out[s] = total
        if reached != n:
            bad += 1
    return bad


@njit(cache=True)
def gnkj_sigma_mismatches(n, k, path_base, att_sigma, una_sigma):
    """Compare BFS transmissions of every G(n,k,j), j = 1..n-k, against the
    closed-form expectations.

    ``path_base`` holds the expected transmission of path vertex i at j = 0
    (the true value is path_base[i] - j); attached and unattached clique
    vertices are expected at ``att_sigma`` and ``una_sigma``. Returns the
    total number of vertex-level mismatches plus a large penalty for any
    disconnected BFS, so 0 means full agreement.
    """
    q = n - k
    words = (n + 63) >> 6
    adj = np.zeros((n, words), dtype=np.uint64)
    for i in range(k - 1):
        adj[i, (i + 1) >> 6] |= _U1 << np.uint64((i + 1) & 63)
        adj[i + 1, i >> 6] |= _U1 << np.uint64(i & 63)
    for a in range(k, n):
        for b in range(k, n):
            if a != b:
                adj[a, b >> 6] |= _U1 << np.uint64(b & 63)
    seen = np.empty(words, dtype=np.uint64)
    acc = np.empty(words, dtype=np.uint64)
    frontier = np.empty(n, dtype=np.int64)
    nxt = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.int64)
    mismatches = 0
    for j in range(1, q + 1):
        c = k + j - 1
        adj[0, c >> 6] |= _U1 << np.uint64(c & 63)
        adj[c, 0] |= _U1  # vertex 0 lives in word 0, bit 0
        bad = _all_source_sigma(adj, n, words, seen, acc, frontier, nxt, sigma)
        mismatches += bad * 1000000
        for s in range(n):
            if s < k:
                expect = path_base[s] - j
            elif s < k + j:
                expect = att_sigma
            else:
                expect = una_sigma
            if sigma[s] != expect:
                mismatches += 1
    return mismatches


@njit(cache=True)
def tree_scan(n, edges):
    """Transmissions and eccentricities for a batch of trees on n vertices.

    ``edges`` has shape (t, n-1, 2). Returns (sigma, ecc) arrays of shape
    (t, n). Plain queue-based BFS from every vertex of every tree.
    """
    t_count = edges.shape[0]
    sigma = np.zeros((t_count, n), dtype=np.int64)
    ecc = np.zeros((t_count, n), dtype=np.int64)
    head = np.empty(n, dtype=np.int64)
    nbr = np.empty(2 * (n - 1), dtype=np.int64)
    link = np.empty(2 * (n - 1), dtype=np.int64)
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for ti in range(t_count):
        for v in range(n):
            head[v] = -1
        pos = 0
        for e in range(n - 1):
            u = edges[ti, e, 0]
            v = edges[ti, e, 1]
            nbr[pos] = v
            link[pos] = head[u]
            head[u] = pos
            pos += 1
            nbr[pos] = u
            link[pos] = head[v]
            head[v] = pos
            pos += 1
        for s in range(n):
            for v in range(n):
                dist[v] = -1
            dist[s] = 0
            queue[0] = s
            qh = 0
            qt = 1
            total = 0
            far = 0
            while qh < qt:
                u = queue[qh]
                qh += 1
                du = dist[u]
                if du > far:
                    far = du
                total += du
                p = head[u]
                while p >= 0:
                    w = nbr[p]
                    if dist[w] < 0:
                        dist[w] = du + 1
                        queue[qt] = w
                        qt += 1
                    p = link[p]
            sigma[ti, s] = total
            ecc[ti, s] = far
    return sigma, ecc


@njit(cache=True)
def small_graph_scan(masks, n, edge_u, edge_v):
    """Profile every labeled graph given by edge bitmasks on n <= 8 vertices.

    Returns (connected, sigma, ecc, deg) arrays; sigma/ecc rows are only
    meaningful where connected is True.
    """
    g_count = masks.shape[0]
    e_count = edge_u.shape[0]
    connected = np.zeros(g_count, dtype=np.bool_)
    sigma = np.zeros((g_count, n), dtype=np.int32)
    ecc = np.zeros((g_count, n), dtype=np.int8)
    deg = np.zeros((g_count, n), dtype=np.int8)
    rows = np.empty(n, dtype=np.int64)
    full = (1 << n) - 1
    for gi in range(g_count):
        mask = masks[gi]
        for v in range(n):
            rows[v] = 0
        for e in range(e_count):
            if (mask >> e) & 1:
                u = edge_u[e]
                v = edge_v[e]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                deg[gi, u] += 1
                deg[gi, v] += 1
        ok = True
        for s in range(n):
            frontier = 1 << s
            seen = frontier
            total = 0
            t = 0
            while frontier != 0:
                t += 1
                acc = 0
                for v in range(n):
                    if (frontier >> v) & 1:
                        acc |= rows[v]
                fresh = acc & ~seen & full
                if fresh == 0:
                    break
                seen |= fresh
                cnt = 0
                for v in range(n):
                    if (fresh >> v) & 1:
                        cnt += 1
                total += t * cnt
                ecc[gi, s] = t
                frontier = fresh
            if seen != full:
                ok = False
                break
            sigma[gi, s] = total
        connected[gi] = ok
    return connected, sigma, ecc, deg
