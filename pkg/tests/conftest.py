import itertools
import random

import pytest

from hyperind import Hypergraph


def random_hypergraph(n: int, r: int, rng: random.Random,
                      max_edges: int | None = None) -> Hypergraph:
    """A random simple r-uniform hypergraph on n vertices."""
    pool = list(itertools.combinations(range(n), r))
    cap = min(len(pool), 2 * n if max_edges is None else max_edges)
    m = rng.randint(0, cap)
    return Hypergraph(n, rng.sample(pool, m))


def brute_is_independent(g: Hypergraph, s: frozenset[int]) -> bool:
    """Definition-level oracle: no edge is a subset of s."""
    return not any(set(e) <= s for e in g.edges)


def brute_count(g: Hypergraph) -> int:
    """Pure-python oracle counting independent sets one subset at a time."""
    total = 0
    for bits in itertools.product((0, 1), repeat=g.n):
        s = frozenset(v for v in range(g.n) if bits[v])
        if brute_is_independent(g, s):
            total += 1
    return total


@pytest.fixture
def rng():
    return random.Random(20260823)
