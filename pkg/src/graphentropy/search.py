"""Extremal searches over graph families and exhaustive verifiers.

The central engine is the sweep over the path-plus-clique family: for a
given order it scans every attachment count for every path length in range
and reports the parameters minimizing the Wiener entropy. Transmissions are
exact integers; the bulk scan uses a precomputed x*log2(x) table over the
integer transmission range (the sweep's arguments form contiguous integer
blocks), and every candidate minimum is re-evaluated with compensated
summation before records are compared, so reported values are good to well
below the 1e-12 tie tolerance.

The remaining operations are brute-force searches over exhaustive tree and
small-graph enumerations, plus closed-form searches where the structure
pins everything down (radius-1 eccentricity minimizers, caterpillar
eccentricity maximizers).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil, floor, fsum, log, log2, sqrt
from typing import Iterable, Sequence

import numpy as np

from .enumeration import (
    free_trees,
    graph_from_mask,
    scan_connected_graphs,
    tree_certificate,
)
from .families import (
    ClassProfile,
    GnkjSpec,
    gnkj_profile,
    make_diam3_tree,
    make_diam5_tree,
    make_star,
)
from .graphs import Graph, eccentricity_entropy, wiener_entropy
from .seqentropy import grouped_entropy

__all__ = [
    "SearchRecord",
    "default_k_cap",
    "gnkj_curve",
    "local_minima",
    "min_wiener_gnkj",
    "tree_profiles",
    "min_wiener_tree",
    "radius1_ecc_entropy",
    "min_ecc_radius1",
    "radius1_argmin_in_floor_ceil",
    "min_ecc_bruteforce",
    "top3_ecc_trees",
    "max_ecc_given_diameter",
    "check_star_wiener_conjecture",
    "check_distance_lemmas",
    "wiener_trend",
]

TIE_TOL = 1e-12
_REFINE_WINDOW = 1e-9


@dataclass(frozen=True)
class SearchRecord:
    """One extremal-search result: parameters, value in bits, and a witness
    (a graph, a class profile, or a grouped multiset) that re-evaluates to
    the stored value."""

    n: int
    params: tuple
    value: float
    witness: object
    notes: tuple[str, ...] = field(default=())


def default_k_cap(n: int) -> int:
    """Default upper bound of the path-length range for the family sweep.

    Mirrors the restricted range the published tables were computed with
    (an unproven monotonicity-in-k assumption; sweeps note when the argmin
    touches this boundary). ``full_k`` sweeps override it.
    """
    return min(n - 1, ceil(4.0 * sqrt(n) * log2(n)))


def _gnkj_setup(n: int, k: int):
    q = n - k
    i = np.arange(k, dtype=np.int64)
    base = (i + 2) * q + i * (i + 1) // 2 + (k - 1 - i) * (k - i) // 2
    att = q - 1 + k * (k + 1) // 2
    una = q - 1 + k * (k + 3) // 2
    return q, base, att, una


def _phi_cap(n: int, ks: Sequence[int]) -> int:
    k = np.asarray(list(ks), dtype=np.int64)
    top = (k + 1) * (n - k) + (k - 1) * k // 2
    return int(top.max())


def _phi_table(limit: int) -> np.ndarray:
    x = np.arange(limit, dtype=np.float64)
    out = np.empty(limit, dtype=np.float64)
    with np.errstate(divide="ignore"):
        np.log2(x, out=out)
    out[0] = 0.0
    out *= x
    return out


_PHI_TABLE_MAX = 60_000_000  # ~480 MB; larger sweeps fall back to direct log2


def gnkj_curve(n: int, k: int, phi: np.ndarray | None = None) -> np.ndarray:
    """Wiener entropy of G(n,k,j) for j = 1..n-k, as a float64 array.

    ``phi`` may hold a precomputed x*log2(x) table covering the transmission
    range; without it the values are computed directly in slabs.
    """
    spec_check = GnkjSpec(n, k, 1)  # validates n, k
    del spec_check
    q, base, att, una = _gnkj_setup(n, k)
    rev = np.zeros(q, dtype=np.float64)  # rev[t] = path term at j = q - t
    if phi is not None:
        for c in base.tolist():
            rev += phi[c - q : c]
    else:
        offsets = np.arange(-q, 0, dtype=np.int64)
        chunk = max(1, 4_000_000 // max(q, 1))
        for lo in range(0, k, chunk):
            block = base[lo : lo + chunk, None] + offsets[None, :]
            x = block.astype(np.float64)
            np.multiply(x, np.log2(x), out=x)
            rev += x.sum(axis=0)
    path_term = rev[::-1]
    j = np.arange(1, q + 1, dtype=np.float64)
    total = float(int(base.sum()) + q * una) - 2.0 * k * j
    mix = path_term + j * (att * log2(att)) + (q - j) * (una * log2(una))
    return np.log2(total) - mix / total


def local_minima(curve: np.ndarray) -> np.ndarray:
    """Boolean mask of strict local minima (ends compare to one neighbor)."""
    m = np.zeros(curve.shape, dtype=bool)
    if curve.size == 1:
        m[0] = True
        return m
    m[0] = curve[0] < curve[1]
    m[-1] = curve[-1] < curve[-2]
    if curve.size > 2:
        inner = (curve[1:-1] < curve[:-2]) & (curve[1:-1] < curve[2:])
        m[1:-1] = inner
    return m


def _scan_one_k(n: int, k: int, phi: np.ndarray | None) -> tuple[float, int]:
    """Best (value, j) for fixed k; candidates near the scan minimum are
    re-evaluated with compensated summation before comparison."""
    curve = gnkj_curve(n, k, phi)
    vmin = float(curve.min())
    cand = np.nonzero(curve <= vmin + _REFINE_WINDOW)[0]
    best_v = None
    best_j = -1
    for idx in cand.tolist():
        j = idx + 1
        v = gnkj_profile(GnkjSpec(n, k, j)).entropy_bits()
        if best_v is None or v < best_v - TIE_TOL:
            best_v = v
            best_j = j
    return best_v, best_j


def min_wiener_gnkj(
    n: int,
    k_range: tuple[int, int] | None = None,
    full_k: bool = False,
    threads: int = 1,
) -> SearchRecord:
    """Parameters (k, j) minimizing the Wiener entropy of G(n,k,j).

    All j are scanned exhaustively for every k in range; ties within 1e-12
    break toward the lexicographically smallest (k, j). The witness is the
    closed-form class profile of the winner.
    """
    if n < 3:
        raise ValueError("the family needs order at least 3")
    if k_range is not None:
        lo, hi = k_range
        if not 1 <= lo <= hi <= n - 1:
            raise ValueError("empty or invalid k range")
    else:
        lo, hi = 1, (n - 1 if full_k else default_k_cap(n))
    ks = list(range(lo, hi + 1))
    phi = None
    cap = _phi_cap(n, ks)
    if cap <= _PHI_TABLE_MAX:
        phi = _phi_table(cap)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda k: _scan_one_k(n, k, phi), ks))
    else:
        results = [_scan_one_k(n, k, phi) for k in ks]
    best = None  # (value, k, j)
    for k, (v, j) in zip(ks, results):
        if best is None or v < best[0] - TIE_TOL:
            best = (v, k, j)
    value, k, j = best
    notes = ()
    if k == hi and hi < n - 1:
        notes = ("argmin-at-k-range-boundary",)
    witness = gnkj_profile(GnkjSpec(n, k, j))
    return SearchRecord(n=n, params=(k, j), value=value, witness=witness, notes=notes)


def tree_profiles(trees: Sequence[Graph]):
    """Batched (transmissions, eccentricities) arrays for same-order trees."""
    from ._fastscan import tree_scan

    n = trees[0].n
    edges = np.empty((len(trees), n - 1, 2), dtype=np.int64)
    for i, t in enumerate(trees):
        if t.n != n or t.m != n - 1:
            raise ValueError("tree_profiles expects trees of one common order")
        edges[i] = t.edge_list()
    return tree_scan(n, edges)


def _batch_entropy(values: np.ndarray) -> np.ndarray:
    """Row-wise entropy in bits of positive integer value arrays."""
    x = values.astype(np.float64)
    total = x.sum(axis=1)
    mix = (x * np.log2(x)).sum(axis=1)
    return np.log2(total) - mix / total


def min_wiener_tree(n: int) -> SearchRecord:
    """Exhaustive minimum of the Wiener entropy over all trees of order n.

    The witness is the tuple of extremal trees (usually one; ties within
    1e-12 are all reported).
    """
    if not 3 <= n <= 18:
        raise ValueError("tree search supports 3 <= n <= 18")
    trees = list(free_trees(n))
    sigma, _ = tree_profiles(trees)
    iw = _batch_entropy(sigma)
    vmin = float(iw.min())
    winners = tuple(trees[i] for i in np.nonzero(iw <= vmin + TIE_TOL)[0])
    value = wiener_entropy(winners[0])
    return SearchRecord(n=n, params=(), value=value, witness=winners)


def radius1_ecc_entropy(n: int, k: int) -> float:
    """Eccentricity entropy of a radius-1 graph with k universal vertices.

    The eccentricity multiset is then {1^k, 2^(n-k)} and the entropy equals
    log2(2n-k) - 2(n-k)/(2n-k), independent of any other structure.
    """
    if not 1 <= k <= n:
        raise ValueError("k must lie in [1, n]")
    s = 2 * n - k
    return log2(s) - 2.0 * (n - k) / s


_RADIUS1_COEFF = 2.0 - 2.0 * log(2.0)


def min_ecc_radius1(n: int) -> SearchRecord:
    """Minimum radius-1 eccentricity entropy over the universal-vertex count.

    Scans f(k) = log2(2n-k) - 2(n-k)/(2n-k) over integer k in [1, n]; the
    argmin always lands on floor or ceil of (2-2*ln2)*n, which is asserted.
    """
    if n < 2:
        raise ValueError("order must be at least 2")
    k = np.arange(1, n + 1, dtype=np.float64)
    s = 2.0 * n - k
    vals = np.log2(s) - 2.0 * (n - k) / s
    kstar = int(np.argmin(vals)) + 1
    anchors = {max(1, min(n, floor(_RADIUS1_COEFF * n))), max(1, min(n, ceil(_RADIUS1_COEFF * n)))}
    if kstar not in anchors:
        raise AssertionError(f"argmin {kstar} escaped floor/ceil anchors {anchors}")
    value = radius1_ecc_entropy(n, kstar)
    witness = ((1, kstar), (2, n - kstar)) if kstar < n else ((1, n),)
    return SearchRecord(n=n, params=(kstar,), value=value, witness=witness)


def radius1_argmin_in_floor_ceil(n_max: int) -> bool:
    """Vectorized check that the radius-1 argmin stays on the floor/ceil
    anchors for every order 2..n_max.

    f is unimodal in k (its real minimizer is (2-2*ln2)*n and the derivative
    changes sign once), so it suffices that the better anchor beats both
    outside neighbors.
    """
    ns = np.arange(2, n_max + 1, dtype=np.int64)
    kf = np.floor(_RADIUS1_COEFF * ns).astype(np.int64)
    kf = np.clip(kf, 1, ns)
    kc = np.clip(kf + 1, 1, ns)

    def f(k):
        k = k.astype(np.float64)
        nn = ns.astype(np.float64)
        s = 2.0 * nn - k
        return np.log2(s) - 2.0 * (nn - k) / s

    best = np.minimum(f(kf), f(kc))
    left = np.clip(kf - 1, 1, ns)
    right = np.clip(kc + 1, 1, ns)
    ok_left = (left == kf) | (best <= f(left))
    ok_right = (right == kc) | (best <= f(right))
    return bool(np.all(ok_left & ok_right))


def min_ecc_bruteforce(n: int) -> SearchRecord:
    """Exhaustive minimum eccentricity entropy over connected graphs.

    Asserts that every minimizer has radius 1 with exactly the closed-form
    optimal number of universal vertices.
    """
    if not 2 <= n <= 7:
        raise ValueError("brute force supports 2 <= n <= 7")
    scan = scan_connected_graphs(n)
    ecc = scan.eccentricities.astype(np.int64)
    lut = np.zeros(n + 1, dtype=np.float64)
    for v in range(1, n + 1):
        lut[v] = v * log2(v)
    total = ecc.sum(axis=1).astype(np.float64)
    mix = lut[ecc].sum(axis=1)
    ent = np.log2(total) - mix / total
    vmin = float(ent.min())
    sel = np.nonzero(ent <= vmin + TIE_TOL)[0]
    closed = min_ecc_radius1(n)
    kstar = closed.params[0]
    for i in sel.tolist():
        row = ecc[i]
        if row.min() != 1:
            raise AssertionError(f"minimizer without radius 1 at n={n}")
        if int((row == 1).sum()) != kstar:
            raise AssertionError(f"minimizer with unexpected universal count at n={n}")
    if abs(vmin - closed.value) > 1e-9:
        raise AssertionError("brute-force minimum disagrees with closed form")
    witness = graph_from_mask(n, int(scan.masks[sel[0]]))
    return SearchRecord(n=n, params=(kstar,), value=closed.value, witness=witness)


def top3_ecc_trees(n: int) -> list[SearchRecord]:
    """Three largest distinct eccentricity-entropy values over trees of
    order n, with witnesses.

    Asserts the known ranking: diameter-3 trees first, then the
    {3,3,4,...,4,5,5} eccentricity class, then the star.
    """
    if not 6 <= n <= 18:
        raise ValueError("exhaustive mode supports 6 <= n <= 18")
    trees = list(free_trees(n))
    _, ecc = tree_profiles(trees)
    ent = _batch_entropy(ecc)
    order = np.argsort(ent)[::-1]
    records = []
    seen_values: list[float] = []
    for idx in order.tolist():
        v = float(ent[idx])
        if any(abs(v - u) <= TIE_TOL for u in seen_values):
            continue
        seen_values.append(v)
        records.append(
            SearchRecord(n=n, params=(len(records) + 1,), value=v, witness=trees[idx])
        )
        if len(records) == 3:
            break
    expect = [
        eccentricity_entropy(make_diam3_tree(n)),
        eccentricity_entropy(make_diam5_tree(n)),
        eccentricity_entropy(make_star(n)),
    ]
    if not (expect[0] > expect[1] > expect[2]):
        raise AssertionError("family values are not strictly ordered")
    for rec, ref in zip(records, expect):
        if abs(rec.value - ref) > 1e-9:
            raise AssertionError(f"top-3 value {rec.value} does not match family value {ref}")
    return records


def _diametral_ecc_groups(d: int) -> tuple[list[int], list[int]]:
    """Eccentricity values and counts along a diametral path of length d."""
    values: list[int] = []
    counts: list[int] = []
    half = (d + 1) // 2
    if d % 2 == 0:
        values.append(d // 2)
        counts.append(1)
        start = d // 2 + 1
    else:
        start = half
    for e in range(start, d + 1):
        values.append(e)
        counts.append(2)
    return values, counts


def max_ecc_given_diameter(n: int, d: int) -> SearchRecord:
    """Maximum eccentricity entropy over trees of order n and diameter d.

    The diametral path fixes its own eccentricities; the n-d-1 pendant
    leaves all take one eccentricity b in [ceil(d/2)+1, d], optimally the
    floor/ceil of the real maximizer clamped into that window. Returns the
    record with params (d, b).
    """
    if not 3 <= d <= n - 1:
        raise ValueError("need 3 <= d <= n-1")
    t = n - d - 1
    if t < 1:
        raise ValueError("need at least one pendant leaf (n - d - 1 >= 1)")
    values, counts = _diametral_ecc_groups(d)
    total = float(sum(v * c for v, c in zip(values, counts)))
    mix = fsum(c * v * log2(v) for v, c in zip(values, counts))
    fill = 2.0 ** (mix / total)
    lo = -(-d // 2) + 1
    hi = d

    def filled(b: int) -> float:
        s = total + t * b
        return log2(s) - (mix + t * b * log2(b)) / s

    cands = sorted({min(max(floor(fill), lo), hi), min(max(ceil(fill), lo), hi)})
    b = cands[0]
    if len(cands) == 2 and filled(cands[1]) > filled(cands[0]) + TIE_TOL:
        b = cands[1]
    value = grouped_entropy([*values, b], [*counts, t])
    witness = tuple(zip(values, counts)) + ((b, t),)
    return SearchRecord(n=n, params=(d, b), value=value, witness=witness)


def check_star_wiener_conjecture(ns: Iterable[int]) -> dict:
    """Exhaustively test that the star uniquely maximizes Wiener entropy
    among trees of each order in ``ns``.

    Returns a machine-readable report with one PASS/FAIL entry per order
    and a counterexample witness on failure.
    """
    checks = []
    for n in ns:
        if not 5 <= n <= 18:
            raise ValueError("the conjectured range starts at order 5 (cap 18)")
        trees = list(free_trees(n))
        sigma, _ = tree_profiles(trees)
        iw = _batch_entropy(sigma)
        star_idx = [i for i, t in enumerate(trees) if max(t.degrees()) == n - 1]
        star_i = star_idx[0]
        star_value = wiener_entropy(trees[star_i])
        others = np.ones(len(trees), dtype=bool)
        others[star_i] = False
        worst = int(np.argmax(np.where(others, iw, -np.inf)))
        passed = bool(iw[worst] < star_value)
        checks.append(
            {
                "n": n,
                "passed": passed,
                "star_value": star_value,
                "max_non_star": float(iw[worst]),
                "margin": star_value - float(iw[worst]),
                "counterexample": None if passed else trees[worst].edge_list(),
            }
        )
    return {"name": "star-wiener-maximum", "passed": all(c["passed"] for c in checks), "checks": checks}


def check_distance_lemmas(ns: Iterable[int]) -> dict:
    """Exhaustive transmission inequalities over all connected graphs.

    Per order: (n-1)*sigma(v) >= W with equality exactly at star centers;
    sigma(v) >= n-1; and across every edge |sigma(u)-sigma(v)| <= n-2 with
    equality exactly at pendant edges.
    """
    from .enumeration import edge_slots

    checks = []
    for n in ns:
        if not 2 <= n <= 7:
            raise ValueError("exhaustive lemma checks support 2 <= n <= 7")
        scan = scan_connected_graphs(n)
        sigma = scan.transmissions.astype(np.int64)
        deg = scan.degrees.astype(np.int64)
        wiener = sigma.sum(axis=1) // 2
        lower_ok = bool((sigma >= n - 1).all())
        prod_ok = bool(((n - 1) * sigma >= wiener[:, None]).all())
        eq = (n - 1) * sigma == wiener[:, None]
        is_star = (deg.max(axis=1) == n - 1) & (sigma.sum(axis=1) == 2 * (n - 1) ** 2)
        star_center = is_star[:, None] & (deg == n - 1)
        eq_ok = bool((eq == star_center).all())
        edge_ok = True
        edge_eq_ok = True
        for e, (u, v) in enumerate(edge_slots(n)):
            present = (scan.masks >> e) & 1 == 1
            diff = np.abs(sigma[present, u] - sigma[present, v])
            if not (diff <= n - 2).all():
                edge_ok = False
            pend = (deg[present, u] == 1) | (deg[present, v] == 1)
            if not ((diff == n - 2) == pend).all():
                edge_eq_ok = False
        passed = lower_ok and prod_ok and eq_ok and edge_ok and edge_eq_ok
        checks.append(
            {
                "n": n,
                "passed": passed,
                "graphs": int(scan.masks.shape[0]),
                "transmission_lower_bound": lower_ok,
                "transmission_wiener_bound": prod_ok,
                "wiener_equality_characterization": eq_ok,
                "edge_difference_bound": edge_ok,
                "edge_equality_characterization": edge_eq_ok,
            }
        )
    return {"name": "distance-lemmas", "passed": all(c["passed"] for c in checks), "checks": checks}


def wiener_trend(
    n_list: Sequence[int],
    threads: int = 1,
    records: dict[int, SearchRecord] | None = None,
) -> dict:
    """Minimum family Wiener entropy against log2(n) for several orders.

    Reports the ratio value/log2(n) per order; the ratios stay above 3/4 and
    drift toward it slowly as n grows.
    """
    rows = []
    for n in n_list:
        rec = records.get(n) if records else None
        if rec is None:
            rec = min_wiener_gnkj(n, threads=threads)
        k, j = rec.params
        rows.append(
            {
                "n": n,
                "k": k,
                "j": j,
                "value": rec.value,
                "ratio": rec.value / log2(n),
            }
        )
    ratios = [r["ratio"] for r in rows]
    passed = all(r > 0.75 for r in ratios) and all(
        a >= b for a, b in zip(ratios, ratios[1:])
    )
    return {"name": "wiener-lower-bound-trend", "passed": passed, "rows": rows}
