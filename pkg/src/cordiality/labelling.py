"""Vertex 0/1 labellings and their imbalance statistics.

A labelling f assigns each vertex 0 or 1; each edge xy inherits the label
|f(x) - f(y)|. The two imbalances delta_v = |v0 - v1| and delta_e =
|e0 - e1| are what the deficiency measures minimize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class Labelling:
    """Immutable 0/1 vertex labelling; bits[i] = f(v_i)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError("labelling bits must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "Labelling":
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def from_bitstring(cls, s: str) -> "Labelling":
        if any(c not in "01" for c in s):
            raise ParameterError(f"not a bit-string: {s!r}")
        return cls(tuple(int(c) for c in s))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    @property
    def bitstring(self) -> str:
        """Vertex 0 first, e.g. '0011'."""
        return "".join(str(b) for b in self.bits)

    def complement(self) -> "Labelling":
        return Labelling(tuple(1 - b for b in self.bits))

    def ones(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True)
class LabellingStats:
    """Counts and imbalances of one (graph, labelling) pair."""

    v0: int
    v1: int
    e0: int
    e1: int
    delta_v: int
    delta_e: int

    @property
    def v_diff(self) -> int:
        """Signed v0 - v1."""
        return self.v0 - self.v1

    @property
    def e_diff(self) -> int:
        """Signed e0 - e1."""
        return self.e0 - self.e1

    @property
    def is_friendly(self) -> bool:
        return self.delta_v <= 1

    @property
    def is_cordial(self) -> bool:
        return self.delta_v <= 1 and self.delta_e <= 1


def stats(g: Graph, f: Labelling) -> LabellingStats:
    """Compute v_i, e_i and both imbalances by direct edge enumeration."""
    if len(f) != g.n:
        raise ParameterError(f"labelling has {len(f)} bits for a {g.n}-vertex graph")
    v1 = f.ones()
    v0 = g.n - v1
    e1 = 0
    for u, v in g.edges():
        e1 += f.bits[u] ^ f.bits[v]
    e0 = g.m - e1
    return LabellingStats(v0, v1, e0, e1, abs(v0 - v1), abs(e0 - e1))
