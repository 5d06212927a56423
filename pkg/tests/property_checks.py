"""Randomized property checks for the sequence-entropy layer.

Each check runs a requested number of random cases with a seeded generator
and raises AssertionError with context on the first violation. The
acceptance suite drives every check at 1000+ cases.
"""

from math import ceil, floor, log2

import numpy as np

from graphentropy.seqentropy import (
    best_integer_fill,
    fill_entropy,
    majorizes,
    optimal_fill,
    padded_entropy,
    shannon_entropy,
    two_level_fill_entropy,
)


def random_weights(rng, min_len=2, max_len=12, low=0.05, high=10.0):
    size = int(rng.integers(min_len, max_len + 1))
    return rng.uniform(low, high, size)


def transferred_majorant(rng, base):
    """Shift mass from smaller to larger entries; the result strictly
    majorizes ``base`` (equal sums, dominated prefix sums)."""
    a = np.array(base, dtype=float)
    for _ in range(int(rng.integers(1, 5))):
        a = np.sort(a)[::-1]
        i, j = sorted(rng.choice(a.size, size=2, replace=False))
        delta = float(rng.uniform(0.05, 0.9)) * a[j]
        a[i] += delta
        a[j] -= delta
    return a


def check_majorization_strict_entropy(rng, cases):
    """Strictly majorizing pairs have strictly smaller entropy."""
    for _ in range(cases):
        b = random_weights(rng)
        a = transferred_majorant(rng, b)
        assert majorizes(a, b), (a, b)
        assert not majorizes(b, a) or not np.allclose(np.sort(a), np.sort(b))
        ha, hb = shannon_entropy(a), shannon_entropy(b)
        assert ha < hb, (a, b, ha, hb)


def check_segment_minimum_at_endpoint(rng, cases):
    """On segments inside the positive orthant, the entropy minimum over an
    evenly spaced grid sits at an endpoint."""
    for _ in range(cases):
        size = int(rng.integers(2, 9))
        center = rng.uniform(0.5, 5.0, size)
        direction = rng.uniform(-0.9, 0.9, size) * center
        if np.abs(direction).max() < 1e-3:
            direction[0] = 0.3 * center[0]
        values = [shannon_entropy(center + lam * direction) for lam in np.linspace(-1, 1, 101)]
        assert min(values[0], values[-1]) <= min(values) + 1e-12, (center, direction)


def check_fill_value_maximizes(rng, cases):
    """The closed-form fill value maximizes the padded entropy, which is
    increasing below it and decreasing above it."""
    for _ in range(cases):
        a = random_weights(rng, low=0.2, high=9.0)
        t = int(rng.integers(1, 9))
        b = optimal_fill(a).fill_value
        h_opt = fill_entropy(a, b, t)
        for d in (0.01, 0.1):
            assert h_opt + 1e-12 >= fill_entropy(a, b * (1 + d), t)
            assert h_opt + 1e-12 >= fill_entropy(a, b * (1 - d), t)
        below = [fill_entropy(a, b * f, t) for f in (0.5, 0.7, 0.85, 0.97)]
        assert all(x < y + 1e-13 for x, y in zip(below, below[1:])), (a, t, below)
        above = [fill_entropy(a, b * f, t) for f in (1.03, 1.2, 1.5, 2.0)]
        assert all(x > y - 1e-13 for x, y in zip(above, above[1:])), (a, t, above)


def check_integer_fill_optimal(rng, cases):
    """The floor/ceil integer fill matches brute force over constant integer
    fills and beats random non-constant integer fills."""
    for _ in range(cases):
        size = int(rng.integers(2, 10))
        a = rng.uniform(1.05, 12.0, size)
        t = int(rng.integers(1, 11))
        got = best_integer_fill(a, t)
        b = optimal_fill(a).fill_value
        assert got in (floor(b), ceil(b))
        h_got = fill_entropy(a, got, t)
        lo, hi = max(1, floor(b) - 4), ceil(b) + 6
        h_brute = max(fill_entropy(a, x, t) for x in range(lo, hi + 1))
        assert h_got >= h_brute - 1e-12, (a, t, got, h_got, h_brute)
        if t >= 2:
            for _ in range(5):
                vec = rng.integers(max(1, floor(b) - 2), ceil(b) + 3, t)
                if np.all(vec == vec[0]):
                    vec = vec.copy()
                    vec[0] = max(1, vec[0] - 1) if vec[0] > 1 else vec[0] + 1
                h_vec = shannon_entropy(np.concatenate([a, vec.astype(float)]))
                assert h_got >= h_vec - 1e-12, (a, t, got, vec)


def check_two_level_convexity(rng, cases):
    """Strict midpoint convexity of the two-level fill objective."""
    for _ in range(cases):
        n = float(rng.uniform(0.5, 10.0))
        b = float(rng.uniform(1.0, 8.0))
        while True:
            c1, c2 = np.sort(rng.uniform(0.0, n, 2))
            if c2 - c1 >= 0.05 * n:
                break
        mid = two_level_fill_entropy(0.5 * (c1 + c2), n, b)
        avg = 0.5 * (two_level_fill_entropy(c1, n, b) + two_level_fill_entropy(c2, n, b))
        assert mid < avg, (c1, c2, n, b, mid, avg)


def check_padded_identity(rng, cases):
    """Closed-form padded entropy equals the direct entropy of the padded
    sequence to 1e-12."""
    for _ in range(cases):
        a = random_weights(rng)
        extra = int(rng.integers(0, 21))
        n = a.size + extra
        sol = optimal_fill(a, extra)
        direct = shannon_entropy(np.concatenate([a, np.full(extra, sol.fill_value)]))
        closed = padded_entropy(a, n)
        assert abs(closed - direct) < 1e-12, (a, n, closed, direct)


def check_majorization_padding(rng, cases):
    """Majorization reverses under optimal padding: a majorizing c gives
    padded entropy of a at most that of c."""
    for _ in range(cases):
        c = random_weights(rng)
        a = transferred_majorant(rng, c)
        n = c.size + int(rng.integers(0, 16))
        assert padded_entropy(a, n) <= padded_entropy(c, n) + 1e-12, (a, c, n)


def check_subsequence_padding(rng, cases):
    """Padded entropy cannot grow when weights are removed."""
    for _ in range(cases):
        a = random_weights(rng, min_len=3)
        keep = int(rng.integers(1, a.size))
        idx = np.sort(rng.choice(a.size, size=keep, replace=False))
        c = a[idx]
        n = a.size + int(rng.integers(0, 16))
        assert padded_entropy(a, n) <= padded_entropy(c, n) + 1e-12, (a, c, n)


def check_max_entropy_bound(rng, cases):
    """Entropy is at most log2(length), with equality only for constant
    sequences."""
    for _ in range(cases):
        a = random_weights(rng)
        assert shannon_entropy(a) <= log2(a.size) + 1e-12
        const = np.full(int(rng.integers(1, 12)), float(rng.uniform(0.1, 9.0)))
        assert abs(shannon_entropy(const) - log2(const.size)) < 1e-12
        skew = const.copy()
        if skew.size >= 2:
            skew[0] *= 1.05
            assert shannon_entropy(skew) < log2(skew.size) - 1e-7


ALL_CHECKS = [
    check_majorization_strict_entropy,
    check_segment_minimum_at_endpoint,
    check_fill_value_maximizes,
    check_integer_fill_optimal,
    check_two_level_convexity,
    check_padded_identity,
    check_majorization_padding,
    check_subsequence_padding,
    check_max_entropy_bound,
]
