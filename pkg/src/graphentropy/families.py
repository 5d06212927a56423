"""Constructors and closed-form distance profiles for the named graph families.

Covers paths, stars, cycles, brooms (path with pendant leaves at one end),
the path-plus-clique family, diameter-3 and diameter-5 entropy-extremal
trees, and caterpillars with prescribed leaf eccentricity.

The closed-form transmission profiles let entropy sweeps run at orders far
beyond what per-graph breadth-first search could reach. They were derived
independently of any asymptotic shortcut and are gated, exhaustively for
every parameter choice up to order 200, against BFS-derived profiles before
any large sweep trusts them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum, log2
from typing import Iterator

from .graphs import Graph

__all__ = [
    "GnkjSpec",
    "ClassProfile",
    "make_path",
    "make_star",
    "make_cycle",
    "make_broom",
    "broom_profile",
    "gnkj_edges",
    "make_gnkj",
    "gnkj_profile",
    "make_diam3_tree",
    "make_diam5_tree",
    "make_caterpillar",
]


@dataclass(frozen=True)
class GnkjSpec:
    """Parameters of the path-plus-clique graph: order n, path length k,
    and j attachment edges between one path end and the clique."""

    n: int
    k: int
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("path part needs at least one vertex")
        if self.n - self.k < 1:
            raise ValueError("clique part needs at least one vertex")
        if not 1 <= self.j <= self.n - self.k:
            raise ValueError("attachment count j must lie in [1, n-k]")


@dataclass(frozen=True)
class ClassProfile:
    """Vertex transmissions grouped by interchangeable vertex class.

    ``classes`` holds (transmission, multiplicity) pairs; multiplicities sum
    to the graph order and transmission totals to twice the Wiener index.
    """

    classes: tuple[tuple[int, int], ...]
    wiener: int

    def __post_init__(self):
        if not self.classes:
            raise ValueError("profile needs at least one class")
        total = 0
        for sigma, mult in self.classes:
            if mult < 1:
                raise ValueError("class multiplicities must be positive")
            if sigma < 0:
                raise ValueError("transmissions must be nonnegative")
            total += sigma * mult
        if total != 2 * self.wiener:
            raise ValueError("transmissions do not sum to twice the Wiener index")

    @property
    def order(self) -> int:
        return sum(m for _, m in self.classes)

    def transmissions(self) -> list[int]:
        """Expand to the full per-vertex transmission list."""
        out: list[int] = []
        for sigma, mult in self.classes:
            out.extend([sigma] * mult)
        return out

    def entropy_bits(self) -> float:
        """Wiener entropy of the profile, in bits (compensated summation)."""
        total = float(2 * self.wiener)
        slog = fsum(m * s * log2(s) for s, m in self.classes)
        return log2(total) - slog / total


def _profile(classes: list[tuple[int, int]]) -> ClassProfile:
    total = sum(s * m for s, m in classes)
    return ClassProfile(classes=tuple(classes), wiener=total // 2)


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def make_star(n: int) -> Graph:
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph(n, [(0, v) for v in range(1, n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def make_broom(n: int, k: int) -> Graph:
    """Path on k vertices whose end vertex carries n-k pendant leaves.

    k=1 and k=2 both give the star; k=n gives the path.
    """
    if not 1 <= k <= n:
        raise ValueError("broom requires 1 <= k <= n")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(0, leaf) for leaf in range(k, n)]
    return Graph(n, edges)


def broom_profile(n: int, k: int) -> ClassProfile:
    """Closed-form transmissions of the broom, one class per path position
    plus one leaf class.

    The path vertex at distance i-1 from the leaf-bearing end c has
    transmission i*(n-k) + C(i,2) + C(k-i+1,2); each leaf has transmission
    2*(n-k-1) + k*(k+1)/2.
    """
    if not 1 <= k <= n:
        raise ValueError("broom requires 1 <= k <= n")
    classes = []
    for i in range(1, k + 1):
        sigma = i * (n - k) + (i - 1) * i // 2 + (k - i + 1) * (k - i) // 2
        classes.append((sigma, 1))
    if n - k:
        classes.append((2 * (n - k - 1) + k * (k + 1) // 2, n - k))
    return _profile(classes)


def gnkj_edges(spec: GnkjSpec) -> Iterator[tuple[int, int]]:
    """Edges of the path-plus-clique graph, streamed.

    Vertices 0..k-1 form the path with vertex 0 the attachment end;
    vertices k..n-1 form the clique, the first j of them joined to vertex 0.
    """
    n, k, j = spec.n, spec.k, spec.j
    for i in range(k - 1):
        yield (i, i + 1)
    for t in range(j):
        yield (0, k + t)
    for a in range(k, n):
        for b in range(a + 1, n):
            yield (a, b)


def make_gnkj(spec: GnkjSpec) -> Graph:
    return Graph(spec.n, gnkj_edges(spec))


def gnkj_profile(spec: GnkjSpec) -> ClassProfile:
    """Closed-form transmissions of the path-plus-clique graph.

    Classes, in construction order: the path vertex at distance i from the
    attachment end for i = 0..k-1, the j attached clique vertices, and the
    n-k-j unattached clique vertices. The path transmissions are
    (i+2)*(n-k) + C(i+1,2) + C(k-i,2) - j; attached and unattached clique
    vertices have n-k-1 + k*(k+1)/2 and n-k-1 + k*(k+3)/2.
    """
    n, k, j = spec.n, spec.k, spec.j
    q = n - k
    classes = []
    for i in range(k):
        sigma = (i + 2) * q + i * (i + 1) // 2 + (k - 1 - i) * (k - i) // 2 - j
        classes.append((sigma, 1))
    classes.append((q - 1 + k * (k + 1) // 2, j))
    if q - j:
        classes.append((q - 1 + k * (k + 3) // 2, q - j))
    return _profile(classes)


def make_diam3_tree(n: int) -> Graph:
    """Diameter-3 tree realizing the eccentricity multiset {2, 2, 3^(n-2)}.

    A double star: adjacent centers carrying 1 and n-3 pendant leaves. Any
    diameter-3 tree has the same eccentricity multiset, hence the same
    eccentricity entropy.
    """
    if n < 4:
        raise ValueError("a diameter-3 tree needs at least 4 vertices")
    edges = [(0, 1), (0, 2)]
    edges += [(1, v) for v in range(3, n)]
    return Graph(n, edges)


def make_diam5_tree(n: int) -> Graph:
    """Tree with eccentricity multiset {3, 3, 4^(n-4), 5, 5}.

    A path on six vertices with the n-6 extra leaves attached to its third
    vertex; for n = 6 this is the plain path.
    """
    if n < 6:
        raise ValueError("this family needs at least 6 vertices")
    edges = [(i, i + 1) for i in range(5)]
    edges += [(2, v) for v in range(6, n)]
    return Graph(n, edges)


def make_caterpillar(n: int, d: int, leaf_ecc: int | None = None) -> Graph:
    """Caterpillar with a diametral path of length d and pendant leaves of a
    prescribed eccentricity.

    The path vertex at distance i from one end has eccentricity max(i, d-i);
    the n-d-1 extra leaves are attached to the leftmost path vertex giving
    each of them eccentricity ``leaf_ecc``, which must lie in
    [ceil(d/2)+1, d]. With n = d+1 the result is the plain path and
    ``leaf_ecc`` is ignored.
    """
    if not 3 <= d <= n - 1:
        raise ValueError("need 3 <= d <= n-1")
    edges = [(i, i + 1) for i in range(d)]
    extra = n - d - 1
    if extra:
        if leaf_ecc is None:
            raise ValueError("leaf_ecc is required when pendant leaves exist")
        lo = -(-d // 2) + 1
        if not lo <= leaf_ecc <= d:
            raise ValueError(f"leaf eccentricity must lie in [{lo}, {d}]")
        anchor = d - leaf_ecc + 1
        edges += [(anchor, v) for v in range(d + 1, n)]
    return Graph(n, edges)
