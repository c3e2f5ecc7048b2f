"""Shared generators for the test suite.

Everything here is seeded and deterministic so failures reproduce.
"""

from __future__ import annotations

import random

from cordiality import Graph, pruefer_decode


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_labelling_bits(rng: random.Random, n: int) -> list[int]:
    return [rng.randint(0, 1) for _ in range(n)]


def random_connected_graph(rng: random.Random, n: int, extra_p: float = 0.3) -> Graph:
    """Random tree plus extra edges; resamples until the result is no star."""
    while True:
        if n == 1:
            return Graph.empty(1)
        if n == 2:
            return Graph.from_edges(2, [(0, 1)])
        tree = pruefer_decode(n, [rng.randrange(n) for _ in range(n - 2)])
        edges = set(tree.edges())
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in edges and rng.random() < extra_p:
                    edges.add((i, j))
        g = Graph.from_edges(n, edges)
        if not is_star(g):
            return g


def is_star(g: Graph) -> bool:
    return g.m == g.n - 1 and any(g.degree(v) == g.n - 1 for v in range(g.n))


def eulerian_cycle_union(
    rng: random.Random, cycles: int, min_len: int = 3, max_len: int = 5,
    edges_mod4: int | None = None,
) -> Graph:
    """Union of edge-disjoint cycles glued at shared vertices.

    Every degree is even and the graph is connected, hence Eulerian. With
    edges_mod4 set, the total edge count is adjusted to that residue.
    """
    lengths = [rng.randint(min_len, max_len) for _ in range(cycles)]
    if edges_mod4 is not None:
        r = (sum(lengths) - edges_mod4) % 4
        if r:
            lengths[-1] += 4 - r
    n = lengths[0]
    edges = [(i, (i + 1) % n) for i in range(n)]
    for length in lengths[1:]:
        attach = rng.randrange(n)
        ring = [attach] + list(range(n, n + length - 1))
        n += length - 1
        edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
    return Graph.from_edges(n, edges)


def iter_partitions(total: int):
    """Non-increasing positive partitions of total."""

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for first in range(min(rest, cap), 0, -1):
            yield from rec(rest - first, first, prefix + (first,))

    yield from rec(total, total, ())
