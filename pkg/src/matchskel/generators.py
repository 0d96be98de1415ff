"""Small graph families used by the test suites and ``matchskel verify --random``."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Graph


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices 0..n-1 (2 ** C(n, 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for k, p in enumerate(pairs) if bits >> k & 1])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Random recursive tree with shuffled vertex names."""
    names = list(range(n))
    rng.shuffle(names)
    edges = [(names[v], names[rng.randrange(v)]) for v in range(1, n)]
    return Graph(n, edges)


def stars_and_triangles(triangles: int, stars: list[int], isolated: int = 0) -> Graph:
    edges = []
    n = 0
    for _ in range(triangles):
        edges += [(n, n + 1), (n + 1, n + 2), (n, n + 2)]
        n += 3
    for t in stars:
        edges += [(n, n + i) for i in range(1, t + 1)]
        n += t + 1
    return Graph(n + isolated, edges)


def random_stars_and_triangles(rng: random.Random, max_edges: int = 14) -> Graph:
    """Random disjoint union of triangles and stars with at most ``max_edges`` edges,
    vertices relabelled at random."""
    budget = rng.randint(1, max_edges)
    triangles = 0
    stars: list[int] = []
    while budget > 0:
        if budget >= 3 and rng.random() < 0.4:
            triangles += 1
            budget -= 3
        else:
            t = rng.randint(1, budget)
            stars.append(t)
            budget -= t
    base = stars_and_triangles(triangles, stars, isolated=rng.randint(0, 1))
    perm = list(range(base.n))
    rng.shuffle(perm)
    return Graph(base.n, [(perm[u], perm[v]) for u, v in base.edges])
