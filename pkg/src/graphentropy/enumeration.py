"""Exhaustive generation of trees and small connected graphs.

Free trees (one representative per isomorphism class) come from networkx's
level-sequence generator and are cross-checked two independent ways: an
arithmetic counting recurrence valid at every order, and, for small orders,
a full Prufer-sequence enumeration deduplicated by canonical form.

Connected graphs on up to 8 vertices are enumerated as labeled edge
bitmasks; entropy extrema are isomorphism-invariant, so the labeled scan is
the default and isomorphism dedup is an optional flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

import networkx as nx
import numpy as np

from .graphs import Graph

TREE_ORDER_CAP = 18
GRAPH_ORDER_CAP = 8

__all__ = [
    "TREE_ORDER_CAP",
    "GRAPH_ORDER_CAP",
    "free_trees",
    "tree_count",
    "tree_certificate",
    "prufer_tree_certificates",
    "edge_slots",
    "graph_from_mask",
    "connected_graph_masks",
    "ConnectedGraphScan",
    "scan_connected_graphs",
    "connected_graphs",
]


def free_trees(n: int) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of trees on n vertices."""
    if not 1 <= n <= TREE_ORDER_CAP:
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_ORDER_CAP}")
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph(n, list(t.edges()))


def tree_count(n: int) -> int:
    """Number of isomorphism classes of trees on n vertices.

    Computed by the classical counting recurrence for rooted trees followed
    by the rooted-to-free correction; independent of any generator, so it
    serves as an oracle for ``free_trees``.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n <= 2:
        return 1
    rooted = [0] * (n + 1)
    rooted[1] = 1
    weighted = [0] * (n + 1)  # weighted[k] = sum over divisors d of k of d*rooted[d]
    for m in range(2, n + 1):
        for k in range(1, m):
            if weighted[k] == 0:
                weighted[k] = sum(d * rooted[d] for d in range(1, k + 1) if k % d == 0)
        rooted[m] = sum(weighted[k] * rooted[m - k] for k in range(1, m)) // (m - 1)
    paired = sum(rooted[i] * rooted[n - i] for i in range(1, n))
    halves = rooted[n // 2] if n % 2 == 0 else 0
    return rooted[n] - (paired - halves) // 2


def _tree_centers(g: Graph) -> list[int]:
    """The one or two eccentricity centers of a tree, by leaf peeling."""
    n = g.n
    if n <= 2:
        return list(range(n))
    deg = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.neighbors(v):
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _rooted_certificate(g: Graph, root: int, parent: int):
    children = [w for w in g.neighbors(root) if w != parent]
    return tuple(sorted(_rooted_certificate(g, w, root) for w in children))


def tree_certificate(g: Graph):
    """Canonical form of a tree; equal exactly for isomorphic trees."""
    centers = _tree_centers(g)
    return min(_rooted_certificate(g, c, -1) for c in centers)


def _prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    import heapq

    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def prufer_tree_certificates(n: int) -> set:
    """Canonical forms of all trees on n vertices via Prufer sequences.

    Enumerates all n^(n-2) labeled trees and deduplicates by certificate;
    an independent (and expensive) oracle for the tree generator, capped at
    n <= 9.
    """
    if not 1 <= n <= 9:
        raise ValueError("the Prufer oracle is practical only for n <= 9")
    if n <= 2:
        return {tree_certificate(g) for g in free_trees(n)}
    out = set()
    for seq in product(range(n), repeat=n - 2):
        g = Graph(n, _prufer_edges(seq, n))
        out.add(tree_certificate(g))
    return out


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Fixed bit order of the upper-triangle edge slots used by graph masks."""
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    slots = edge_slots(n)
    return Graph(n, [slots[i] for i in range(len(slots)) if (mask >> i) & 1])


@dataclass(frozen=True)
class ConnectedGraphScan:
    """Profiles of every connected labeled graph on n vertices.

    Row i of each array describes the graph with edge bitmask ``masks[i]``.
    """

    n: int
    masks: np.ndarray
    transmissions: np.ndarray
    eccentricities: np.ndarray
    degrees: np.ndarray


_SCAN_CACHE: dict[int, "ConnectedGraphScan"] = {}


def scan_connected_graphs(n: int, chunk: int = 1 << 18) -> ConnectedGraphScan:
    """Exhaustive labeled scan computing sigma/ecc/degree per connected graph.

    Results for n <= 7 are memoized; treat the arrays as read-only.
    """
    if not 1 <= n <= GRAPH_ORDER_CAP:
        raise ValueError(f"graph enumeration supports 1 <= n <= {GRAPH_ORDER_CAP}")
    if n in _SCAN_CACHE:
        return _SCAN_CACHE[n]
    from ._fastscan import small_graph_scan

    slots = edge_slots(n)
    eu = np.array([u for u, _ in slots], dtype=np.int64)
    ev = np.array([v for _, v in slots], dtype=np.int64)
    total = 1 << len(slots)
    kept_masks = []
    kept_sigma = []
    kept_ecc = []
    kept_deg = []
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        connected, sigma, ecc, deg = small_graph_scan(masks, n, eu, ev)
        kept_masks.append(masks[connected])
        kept_sigma.append(sigma[connected])
        kept_ecc.append(ecc[connected])
        kept_deg.append(deg[connected])
    scan = ConnectedGraphScan(
        n=n,
        masks=np.concatenate(kept_masks),
        transmissions=np.concatenate(kept_sigma),
        eccentricities=np.concatenate(kept_ecc),
        degrees=np.concatenate(kept_deg),
    )
    if n <= 7:
        _SCAN_CACHE[n] = scan
    return scan


def connected_graph_masks(n: int) -> np.ndarray:
    """Edge bitmasks of all connected labeled graphs on n vertices."""
    return scan_connected_graphs(n).masks


def _iso_key(scan: ConnectedGraphScan, i: int) -> tuple:
    return (
        tuple(np.sort(scan.degrees[i]).tolist()),
        tuple(np.sort(scan.transmissions[i]).tolist()),
        tuple(np.sort(scan.eccentricities[i]).tolist()),
    )


def connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Iterate connected graphs on n vertices.

    By default every labeled connected graph is yielded (duplicates across
    isomorphism classes included; extremal statistics do not care). With
    ``dedup`` one representative per isomorphism class is yielded, using
    invariant bucketing plus exact isomorphism tests.
    """
    scan = scan_connected_graphs(n)
    if not dedup:
        for mask in scan.masks.tolist():
            yield graph_from_mask(n, mask)
        return
    buckets: dict[tuple, list[nx.Graph]] = {}
    for i in range(scan.masks.shape[0]):
        g = graph_from_mask(n, int(scan.masks[i]))
        key = _iso_key(scan, i)
        candidates = buckets.setdefault(key, [])
        gx = nx.Graph(g.edge_list())
        gx.add_nodes_from(range(n))
        if any(nx.is_isomorphic(gx, h) for h in candidates):
            continue
        candidates.append(gx)
        yield g
