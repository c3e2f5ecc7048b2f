"""Exact computation of both deficiency measures by exhaustive search.

d1 minimizes delta_v + delta_e over all 2^n labellings; d2 minimizes
delta_e over friendly labellings (delta_v <= 1). Both are invariant under
complementing a labelling, so the sweep pins f(v_0) = 0 and visits only
2^(n-1) labellings. The inner loop walks a reflected-binary Gray code and
updates edge counts with one row popcount per step; it lives in a compiled
extension when available, with a pure-Python fallback of identical
semantics.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from . import _sweep_py
from .errors import CapacityError, ParameterError
from .graphs import Graph
from .labelling import Labelling, LabellingStats, stats

SOLVER_CAP = 30

_KERNELS = {"python": _sweep_py}
try:
    from . import _sweep as _sweep_c

    _KERNELS["c"] = _sweep_c
    DEFAULT_KERNEL = "c"
except ImportError:
    DEFAULT_KERNEL = "python"

# CORDIALITY_KERNEL=python forces the fallback even when the extension built
if os.environ.get("CORDIALITY_KERNEL") in _KERNELS:
    DEFAULT_KERNEL = os.environ["CORDIALITY_KERNEL"]

_INF = _sweep_py.INF


def available_kernels() -> tuple[str, ...]:
    """Kernel names usable as solve_exact(..., kernel=...); fastest first."""
    return tuple(sorted(_KERNELS, key=lambda k: k != DEFAULT_KERNEL))


@dataclass(frozen=True)
class ExactResult:
    """Output of an exhaustive solve.

    Witnesses are in complement normal form (f(v_0) = 0) and are the
    lexicographically smallest minimizers, so results are reproducible
    across kernels and thread counts.
    """

    d1: int
    d1_witness: Labelling
    d2: int
    d2_witness: Labelling
    cordial: bool
    labellings_visited: int


def _check_solvable(g: Graph) -> None:
    if g.n < 1:
        raise CapacityError("solver requires at least one vertex")
    if g.n > SOLVER_CAP:
        raise CapacityError(f"solver cap is {SOLVER_CAP} vertices, got {g.n}")


def _rows_reversed(g: Graph) -> list[int]:
    """Adjacency rows remapped so vertex u sits at bit (n-1-u)."""
    n = g.n
    out = []
    for v in range(n):
        row = g.rows[v]
        rev = 0
        while row:
            u = (row & -row).bit_length() - 1
            rev |= 1 << (n - 1 - u)
            row &= row - 1
        out.append(rev)
    return out


def _key_to_labelling(key: int, n: int) -> Labelling:
    return Labelling(tuple((key >> (n - 1 - i)) & 1 for i in range(n)))


def solve_exact(g: Graph, threads: int = 1, kernel: str | None = None) -> ExactResult:
    """Exhaustively compute d1 and d2 with lexicographic-smallest witnesses.

    The labelling space splits into 2^b blocks (b from the thread count) by
    fixing the labels of the b highest-indexed vertices; each block sweeps
    independently and the merge is order-free, so the result is identical
    for every thread count and kernel.
    """
    _check_solvable(g)
    if threads < 1:
        raise ParameterError("thread count must be positive")
    if kernel is not None and kernel not in _KERNELS:
        raise ParameterError(f"unknown kernel {kernel!r}; have {available_kernels()}")
    mod = _KERNELS[kernel or DEFAULT_KERNEL]

    n, m = g.n, g.m
    rows_rev = _rows_reversed(g)
    b = min((threads - 1).bit_length(), n - 1)
    sweep_bits = n - 1 - b
    blocks = range(1 << b)

    def run(block: int):
        return mod.sweep_block(rows_rev, n, m, block, sweep_bits)

    if b and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(block) for block in blocks]

    d1, w1, d2, w2 = _INF, 0, _INF, 0
    visited = 0
    for bd1, bw1, bd2, bw2, bvisited in results:
        visited += bvisited
        if bd1 < d1 or (bd1 == d1 and bw1 < w1):
            d1, w1 = bd1, bw1
        if bd2 < _INF and (bd2 < d2 or (bd2 == d2 and bw2 < w2)):
            d2, w2 = bd2, bw2
    assert d2 < _INF  # a friendly labelling with f(v_0)=0 always exists
    return ExactResult(
        d1=d1,
        d1_witness=_key_to_labelling(w1, n),
        d2=d2,
        d2_witness=_key_to_labelling(w2, n),
        cordial=d2 <= 1,
        labellings_visited=visited,
    )


def solve_naive(g: Graph) -> ExactResult:
    """Reference oracle: recompute the statistics of all 2^n labellings.

    No incremental state and no Gray code; kept deliberately independent of
    solve_exact so the two can check each other. Same tie-break, so the
    witnesses must match solve_exact bit for bit.
    """
    _check_solvable(g)
    n, m = g.n, g.m
    rows_rev = _rows_reversed(g)
    d1, w1, d2, w2 = _INF, 0, _INF, 0
    for key in range(1 << n):
        v1 = key.bit_count()
        e1 = 0
        for i in range(n):
            if not (key >> (n - 1 - i)) & 1:
                e1 += (rows_rev[i] & key).bit_count()
        dv = abs(n - 2 * v1)
        de = abs(m - 2 * e1)
        if dv + de < d1:
            d1, w1 = dv + de, key
        if dv <= 1 and de < d2:
            d2, w2 = de, key
    return ExactResult(
        d1=d1,
        d1_witness=_key_to_labelling(w1, n),
        d2=d2,
        d2_witness=_key_to_labelling(w2, n),
        cordial=d2 <= 1,
        labellings_visited=1 << n,
    )


def is_cordial(g: Graph) -> bool:
    """True iff some labelling has both imbalances at most 1 (d2 <= 1)."""
    return solve_exact(g).d2 <= 1


def is_uniformly_cordial(g: Graph) -> bool:
    """True iff every friendly labelling is cordial.

    Enumerates friendly labellings directly (complement symmetry pins
    f(v_0) = 0); practical to roughly n = 24.
    """
    _check_solvable(g)
    n, m = g.n, g.m
    rows_rev = _rows_reversed(g)
    others = range(1, n)
    if n % 2 == 0:
        one_counts = (n // 2,)
    else:
        one_counts = (n // 2, n // 2 + 1)
    for ones in one_counts:
        if ones > n - 1:
            continue
        for chosen in combinations(others, ones):
            key = 0
            for v in chosen:
                key |= 1 << (n - 1 - v)
            e1 = 0
            for i in range(n):
                if not (key >> (n - 1 - i)) & 1:
                    e1 += (rows_rev[i] & key).bit_count()
            if abs(m - 2 * e1) > 1:
                return False
    return True


@dataclass
class SweepState:
    """Incremental state for single-bit labelling walks.

    Mirrors what the kernels track, in an inspectable form: the current
    labelling, each vertex's count of same-labelled neighbours, and the
    signed differences v0-v1 and e0-e1.
    """

    graph: Graph
    current: list[int]
    same_count: list[int]
    v_diff: int
    e_diff: int

    @classmethod
    def initial(cls, g: Graph, f: Labelling | None = None) -> "SweepState":
        if f is None:
            f = Labelling.from_bits([0] * g.n)
        st = stats(g, f)
        bits = list(f.bits)
        same = [
            sum(1 for u in g.neighbors(v) if bits[u] == bits[v]) for v in range(g.n)
        ]
        return cls(g, bits, same, st.v_diff, st.e_diff)

    def as_labelling(self) -> Labelling:
        return Labelling.from_bits(self.current)

    def recomputed_stats(self) -> LabellingStats:
        return stats(self.graph, self.as_labelling())


def flip(state: SweepState, g: Graph, v: int) -> SweepState:
    """Complement f(v) in place, updating the state in O(deg(v)) time."""
    if g is not state.graph:
        raise ParameterError("flip called with a different graph than the state's")
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range for n={g.n}")
    bits = state.current
    old_same = state.same_count[v]
    deg = g.degree(v)
    new_label = 1 - bits[v]
    bits[v] = new_label
    state.v_diff += -2 if new_label == 1 else 2
    state.e_diff += 2 * (deg - 2 * old_same)
    state.same_count[v] = deg - old_same
    for u in g.neighbors(v):
        state.same_count[u] += 1 if bits[u] == new_label else -1
    return state
