import os

import pytest

LONG_ENABLED = bool(os.environ.get("GRAPHENTROPY_LONG"))

long_run = pytest.mark.skipif(
    not LONG_ENABLED, reason="set GRAPHENTROPY_LONG=1 to enable long-running checks"
)


@pytest.fixture(scope="session")
def tree_data():
    """Memoized (trees, transmissions, eccentricities) per tree order."""
    from graphentropy.enumeration import free_trees
    from graphentropy.search import tree_profiles

    cache = {}

    def get(n):
        if n not in cache:
            trees = list(free_trees(n))
            sigma, ecc = tree_profiles(trees)
            cache[n] = (trees, sigma, ecc)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def sweep_records():
    """Memoized family-sweep records per order."""
    from graphentropy.search import min_wiener_gnkj

    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = min_wiener_gnkj(n)
        return cache[n]

    return get
