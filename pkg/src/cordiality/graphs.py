"""Immutable simple graphs, family generators, join, and random trees.

Vertices are always 0-based. Adjacency is kept as one Python int bitmask
per vertex (bit u of rows[v] set iff uv is an edge), which is what the
popcount-based solver kernels consume.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapacityError, ParameterError

# Joins allocate n bits per row; refuse absurd results instead of thrashing.
_JOIN_ORDER_LIMIT = 1 << 16

FAMILIES = ("path", "cycle", "complete", "star", "multipartite", "wheel", "fan", "join")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    rows[v] is the neighbour bitmask of v; m is the cached edge count.
    Instances are immutable and safe to share across threads.
    """

    n: int
    rows: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        n = self.n
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        if len(self.rows) != n:
            raise ParameterError(f"expected {n} adjacency rows, got {len(self.rows)}")
        mask = (1 << n) - 1
        bits = 0
        for v, row in enumerate(self.rows):
            if row & ~mask:
                raise ParameterError(f"row {v} has bits set beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ParameterError(f"self-loop at vertex {v}")
            bits += row.bit_count()
        if bits % 2:
            raise ParameterError("adjacency matrix is not symmetric")
        for v, row in enumerate(self.rows):
            u = row
            while u:
                w = (u & -u).bit_length() - 1
                if not (self.rows[w] >> v) & 1:
                    raise ParameterError(f"adjacency not symmetric at ({v},{w})")
                u &= u - 1
        if self.m != bits // 2:
            raise ParameterError(f"edge count {self.m} != {bits // 2} set-bit pairs")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; duplicates collapse."""
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        m = sum(r.bit_count() for r in rows) // 2
        return cls(n, tuple(rows), m)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        row = self.rows[v]
        while row:
            yield (row & -row).bit_length() - 1
            row &= row - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            while row:
                yield (u, u + 1 + (row & -row).bit_length() - 1)
                row &= row - 1


@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one member of a graph family.

    n is the defining order parameter (for star, K_{1,n}); fan takes both
    m and n; multipartite takes the part sizes in caller order; join nests
    two specs.
    """

    family: str
    n: int | None = None
    m: int | None = None
    parts: tuple[int, ...] | None = None
    left: "FamilySpec | None" = None
    right: "FamilySpec | None" = None

    def validate(self) -> None:
        f = self.family
        if f not in FAMILIES:
            raise ParameterError(f"unknown family {f!r}")
        if f in ("path", "complete", "star"):
            if self.n is None or self.n < 1:
                raise ParameterError(f"{f} requires n >= 1")
        elif f == "cycle":
            if self.n is None or self.n < 3:
                raise ParameterError("cycle requires n >= 3")
        elif f == "wheel":
            if self.n is None or self.n < 4:
                raise ParameterError("wheel requires n >= 4")
        elif f == "fan":
            if self.m is None or self.m < 1 or self.n is None or self.n < 1:
                raise ParameterError("fan requires m >= 1 and n >= 1")
        elif f == "multipartite":
            if not self.parts or any(p < 1 for p in self.parts):
                raise ParameterError("multipartite requires r >= 1 parts, each >= 1")
        elif f == "join":
            if self.left is None or self.right is None:
                raise ParameterError("join requires two nested specs")
            self.left.validate()
            self.right.validate()

    def describe(self) -> str:
        """Short human/CSV-friendly parameter rendering."""
        f = self.family
        if f == "fan":
            return f"m={self.m},n={self.n}"
        if f == "multipartite":
            return "parts=" + ",".join(str(p) for p in self.parts)
        if f == "join":
            return f"({self.left.describe()})+({self.right.describe()})"
        return f"n={self.n}"


def path_spec(n: int) -> FamilySpec:
    return FamilySpec("path", n=n)


def cycle_spec(n: int) -> FamilySpec:
    return FamilySpec("cycle", n=n)


def complete_spec(n: int) -> FamilySpec:
    return FamilySpec("complete", n=n)


def star_spec(n: int) -> FamilySpec:
    return FamilySpec("star", n=n)


def multipartite_spec(*parts: int) -> FamilySpec:
    return FamilySpec("multipartite", parts=tuple(parts))


def wheel_spec(n: int) -> FamilySpec:
    return FamilySpec("wheel", n=n)


def fan_spec(m: int, n: int) -> FamilySpec:
    return FamilySpec("fan", m=m, n=n)


def join_spec(left: FamilySpec, right: FamilySpec) -> FamilySpec:
    return FamilySpec("join", left=left, right=right)


def generate(spec: FamilySpec) -> Graph:
    """Construct the canonical graph of a family.

    Layout conventions: wheel = cycle on 0..n-2 plus hub n-1; fan = path on
    0..n-1 plus independent vertices n..n+m-1; multipartite parts occupy
    consecutive index blocks in the given order.
    """
    spec.validate()
    f = spec.family
    if f == "path":
        return Graph.from_edges(spec.n, ((i, i + 1) for i in range(spec.n - 1)))
    if f == "cycle":
        n = spec.n
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if f == "complete":
        n = spec.n
        return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
    if f == "star":
        return generate(multipartite_spec(1, spec.n))
    if f == "multipartite":
        parts = spec.parts
        n = sum(parts)
        offsets = []
        at = 0
        for p in parts:
            offsets.append(at)
            at += p
        edges = []
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                for u in range(offsets[a], offsets[a] + parts[a]):
                    for v in range(offsets[b], offsets[b] + parts[b]):
                        edges.append((u, v))
        return Graph.from_edges(n, edges)
    if f == "wheel":
        n = spec.n
        edges = [(i, (i + 1) % (n - 1)) for i in range(n - 1)]
        edges += [(i, n - 1) for i in range(n - 1)]
        return Graph.from_edges(n, edges)
    if f == "fan":
        m, n = spec.m, spec.n
        edges = [(i, i + 1) for i in range(n - 1)]
        edges += [(i, n + j) for j in range(m) for i in range(n)]
        return Graph.from_edges(n + m, edges)
    if f == "join":
        return join(generate(spec.left), generate(spec.right))
    raise ParameterError(f"unknown family {f!r}")


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every cross edge.

    g1 keeps its vertex indices; g2's shift up by g1.n.
    """
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    if n > _JOIN_ORDER_LIMIT:
        raise CapacityError(f"join result has {n} vertices; limit is {_JOIN_ORDER_LIMIT}")
    lower = (1 << n1) - 1
    upper = ((1 << n2) - 1) << n1
    rows = [g1.rows[v] | upper for v in range(n1)]
    rows += [(g2.rows[v] << n1) | lower for v in range(n2)]
    return Graph(n, tuple(rows), g1.m + g2.m + n1 * n2)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a random Pruefer sequence.

    Deterministic for a fixed (n, seed).
    """
    if n < 1:
        raise ParameterError("random_tree requires n >= 1")
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return pruefer_decode(n, seq)


def pruefer_decode(n: int, seq: list[int]) -> Graph:
    """Decode a Pruefer sequence over labels 0..n-1 into its tree."""
    if n < 2 or len(seq) != n - 2:
        raise ParameterError("Pruefer sequence must have length n-2, n >= 2")
    degree = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise ParameterError(f"Pruefer label {v} out of range")
        degree[v] += 1
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def is_connected(g: Graph) -> bool:
    """True for the empty graph and any graph with one reachable component."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        while row:
            v = (row & -row).bit_length() - 1
            nxt |= g.rows[v]
            row &= row - 1
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1
