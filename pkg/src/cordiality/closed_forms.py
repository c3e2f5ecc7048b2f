"""Closed-form deficiency values, bounds, and explicit witness labellings.

Each graph family treated by the library has its two measures evaluated
directly from the parameters: exact integers wherever a formula exists,
an integer interval for the one family (complete multipartite d1 with a
non-square count of odd parts) where only bounds are known. The witness
constructions build concrete labellings attaining the claimed values and
verify themselves with stats() before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DefectError, ParameterError
from .graphs import FamilySpec, generate
from .labelling import Labelling, stats
from .trees import tree_optimal_labelling


@dataclass(frozen=True)
class ClosedFormValue:
    """An exact integer or an integer interval [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ParameterError(f"empty interval [{self.lo},{self.hi}]")

    @classmethod
    def exact(cls, value: int) -> "ClosedFormValue":
        return cls(value, value)

    @classmethod
    def interval(cls, lo: int, hi: int) -> "ClosedFormValue":
        return cls(lo, hi)

    @property
    def kind(self) -> str:
        return "exact" if self.lo == self.hi else "interval"

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ParameterError(f"interval [{self.lo},{self.hi}] has no single value")
        return self.lo

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return str(self.lo) if self.is_exact else f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class CompleteDerivation:
    """How the complete-graph d1 value arose.

    a is the integer with a^2 <= n < (a+1)^2; k_star is the zero-label
    count whose labelling attains d1; case_tag names the formula branch
    (even-gap, gap-one, odd-gap).
    """

    n: int
    a: int
    case_tag: str
    k_star: int


@dataclass(frozen=True)
class MultipartiteDerivation:
    """Witness data for the multipartite bounds.

    d_vector[i] = n_i - 2*k_i realizes the d1 upper-bound labelling
    (-1 on the first ceil((s - floor(sqrt(s)))/2) odd parts, +1 on the
    remaining odd parts, 0 on even parts); s counts odd parts, q = s // 2,
    and a satisfies (2a)^2 <= s < (2a+2)^2.
    """

    parts: tuple[int, ...]
    s: int
    a: int
    d_vector: tuple[int, ...]
    k_vector: tuple[int, ...]
    q: int


@dataclass(frozen=True)
class JoinBounds:
    """Right-hand sides of the join inequalities."""

    d1_upper: int
    d2_upper: int


def closed_form_tree(n: int) -> tuple[ClosedFormValue, ClosedFormValue]:
    """Any tree on n vertices: d1 = 1, d2 = 1 - (n mod 2)."""
    if n < 1:
        raise ParameterError("tree order must be >= 1")
    return ClosedFormValue.exact(1), ClosedFormValue.exact(1 - n % 2)


def _complete_k_star(n: int, a: int) -> int:
    """Zero-count k minimizing (n-2k) + |(n-2k)^2 - n| / 2 over 0<=k<=n/2.

    Evaluates the two candidate imbalances c = n-2k from the increasing
    (c^2 >= n) and decreasing (c^2 < n) regimes; ties go to the second.
    """
    ceil_rt = a if a * a == n else a + 1
    candidates = []
    c1 = ceil_rt if (ceil_rt - n) % 2 == 0 else ceil_rt + 1
    if c1 <= n:
        candidates.append((c1 + (c1 * c1 - n) // 2, 1, c1))
    if a * a == n:
        c2 = a - 2
    else:
        c2 = a if (a - n) % 2 == 0 else a - 1
    if c2 >= 0:
        candidates.append((c2 + (n - c2 * c2) // 2, 2, c2))
    _, _, c = min(candidates, key=lambda t: (t[0], -t[1]))
    return (n - c) // 2


def closed_form_complete(
    n: int,
) -> tuple[ClosedFormValue, ClosedFormValue, CompleteDerivation]:
    """Complete graph on n vertices: exact d1 (three branches) and d2 = n//2."""
    if n < 1:
        raise ParameterError("complete graph order must be >= 1")
    a = isqrt(n)
    gap = n - a * a
    if gap % 2 == 0:
        d1 = a + gap // 2
        tag = "even-gap"
    elif gap == 1:
        d1 = 2 * a - 1
        tag = "gap-one"
    else:
        d1 = a + 1 + ((a + 1) ** 2 - n) // 2
        tag = "odd-gap"
    deriv = CompleteDerivation(n=n, a=a, case_tag=tag, k_star=_complete_k_star(n, a))
    return ClosedFormValue.exact(d1), ClosedFormValue.exact(n // 2), deriv


def _multipartite_d_vector(parts: tuple[int, ...], s: int) -> tuple[int, ...]:
    rt = isqrt(s)
    neg = (s - rt + 1) // 2
    d = []
    seen_odd = 0
    for p in parts:
        if p % 2 == 0:
            d.append(0)
        else:
            seen_odd += 1
            d.append(-1 if seen_odd <= neg else 1)
    return tuple(d)


def closed_form_multipartite(
    parts,
) -> tuple[ClosedFormValue, ClosedFormValue, MultipartiteDerivation]:
    """Complete multipartite graph: d2 = s//2 exactly; d1 exact iff s is square.

    For non-square s the d1 interval is [floor(sqrt(s)), min(case bound,
    3*floor(sqrt(s)))], the case bound depending on the parity of s and on
    which side of the odd square (2a+1)^2 it falls.
    """
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ParameterError("multipartite requires r >= 1 parts, each >= 1")
    s = sum(1 for p in parts if p % 2)
    q = s // 2
    rt = isqrt(s)
    a = rt // 2
    if rt * rt == s:
        d1 = ClosedFormValue.exact(rt)
    else:
        if s % 2 == 0:
            ub = (s + 1 - (2 * a - 1) ** 2) // 2
        elif s < (2 * a + 1) ** 2:
            ub = (s + 1 - (2 * a - 2) ** 2) // 2
        else:
            ub = (s + 1 - (2 * a) ** 2) // 2
        d1 = ClosedFormValue.interval(rt, min(ub, 3 * rt))
    d_vector = _multipartite_d_vector(parts, s)
    k_vector = tuple((p - d) // 2 for p, d in zip(parts, d_vector))
    deriv = MultipartiteDerivation(
        parts=parts, s=s, a=a, d_vector=d_vector, k_vector=k_vector, q=q
    )
    return d1, ClosedFormValue.exact(q), deriv


def closed_form_cycle(n: int) -> tuple[ClosedFormValue, ClosedFormValue]:
    """Cycle on n >= 3 vertices, by n mod 4."""
    if n < 3:
        raise ParameterError("cycle requires n >= 3")
    r = n % 4
    d1 = 0 if r == 0 else 2
    d2 = 0 if r == 0 else (2 if r == 2 else 1)
    return ClosedFormValue.exact(d1), ClosedFormValue.exact(d2)


def closed_form_wheel(n: int) -> tuple[ClosedFormValue, ClosedFormValue]:
    """Wheel on n >= 4 vertices (cycle of n-1 plus hub), by n mod 4."""
    if n < 4:
        raise ParameterError("wheel requires n >= 4")
    r = n % 4
    d1 = 0 if r == 2 else (2 if r == 0 else 1)
    d2 = 2 if r == 0 else 0
    return ClosedFormValue.exact(d1), ClosedFormValue.exact(d2)


def closed_form_fan(m: int, n: int) -> tuple[ClosedFormValue, ClosedFormValue]:
    """Fan: independent set of m joined to a path of n, by parities."""
    if m < 1 or n < 1:
        raise ParameterError("fan requires m >= 1 and n >= 1")
    d1 = 2 if (m % 2 == 1 and n % 2 == 0) else 1
    d2 = 0 if (m % 2 == 0 and n % 2 == 1) else 1
    return ClosedFormValue.exact(d1), ClosedFormValue.exact(d2)


def join_upper_bounds(
    d1_g1: int,
    d1_g2: int,
    d2_g1: int,
    d2_g2: int,
    *,
    n1: int | None = None,
    n2: int | None = None,
    strict: bool = False,
) -> JoinBounds:
    """Upper bounds for the join from the factors' measures.

    d1(G1+G2) <= d1(G1)*d1(G2) + d1(G1) + d1(G2), and
    d2(G1+G2) <= d2(G1) + d2(G2) + 1. The +1 is only needed when both
    orders are odd; pass strict=True with n1, n2 to get that sharper,
    parity-dependent bound (empirically checked, weaker guarantee).
    """
    for x in (d1_g1, d1_g2, d2_g1, d2_g2):
        if x < 0:
            raise ParameterError("deficiency values are nonnegative")
    d1_upper = d1_g1 * d1_g2 + d1_g1 + d1_g2
    extra = 1
    if strict:
        if n1 is None or n2 is None:
            raise ParameterError("strict join bound needs both vertex counts")
        extra = 1 if (n1 % 2 == 1 and n2 % 2 == 1) else 0
    return JoinBounds(d1_upper=d1_upper, d2_upper=d2_g1 + d2_g2 + extra)


def _cycle_witness_bits(n: int) -> list[int]:
    # 1-based position i gets 0 iff i = 1,2 (mod 4)
    return [0 if (i + 1) % 4 in (1, 2) else 1 for i in range(n)]


def _expected_cycle(n: int) -> tuple[int, int]:
    return {0: (0, 0), 1: (1, 1), 2: (0, 2), 3: (1, -1)}[n % 4]


def _expected_wheel(n: int) -> tuple[int, int]:
    return {0: (0, -2), 1: (-1, 0), 2: (0, 0), 3: (1, 0)}[n % 4]


def _expected_fan(m: int, n: int) -> tuple[int, int]:
    if m % 2 == 0:
        return {0: (0, -1), 1: (1, 0), 2: (0, -1), 3: (-1, 0)}[n % 4]
    return {0: (1, -1), 1: (0, -1), 2: (-1, -1), 3: (0, -1)}[n % 4]


def construct_witness(spec: FamilySpec) -> Labelling:
    """Build the explicit labelling the theorems use for this family.

    For cycles, wheels, fans and trees the labelling attains d1 (and d2
    where friendly); for complete graphs it is the d1 minimizer with
    k_star zeros; for multipartite graphs it is the friendly labelling
    attaining d2 = s//2. Joins have no constructive witness, only bounds.
    Each labelling is re-checked with stats() and a DefectError is raised
    on any mismatch with the claimed imbalances.
    """
    spec.validate()
    family = spec.family
    if family == "join":
        raise ParameterError("no witness construction for generic joins")

    if family in ("path", "star"):
        return tree_optimal_labelling(generate(spec))

    g = generate(spec)
    if family == "cycle":
        n = spec.n
        bits = _cycle_witness_bits(n)
        if n % 4 == 2:
            # single-vertex rebalance: vertex 1's neighbours carry different
            # labels, so flipping it zeroes delta_v without moving e0 or e1
            bits[1] = 1
        expect = _expected_cycle(n)
    elif family == "wheel":
        n = spec.n
        bits = _cycle_witness_bits(n - 1) + [1]
        expect = _expected_wheel(n)
    elif family == "fan":
        m, n = spec.m, spec.n
        bits = [0 if (i + 1) % 4 in (0, 1) else 1 for i in range(n)]
        half = m // 2
        for i in range(1, m + 1):
            if i <= half:
                u = 0
            elif i > (m + 1) // 2:
                u = 1
            else:
                u = 0 if n % 4 in (0, 3) else 1
            bits.append(u)
        expect = _expected_fan(m, n)
    elif family == "complete":
        _, _, deriv = closed_form_complete(spec.n)
        bits = [0] * deriv.k_star + [1] * (spec.n - deriv.k_star)
        expect = None
    elif family == "multipartite":
        parts = spec.parts
        s = sum(1 for p in parts if p % 2)
        q = s // 2
        bits = []
        seen_odd = 0
        for p in parts:
            if p % 2 == 0:
                k = p // 2
            else:
                seen_odd += 1
                k = p // 2 if seen_odd <= q else p // 2 + 1
            bits += [0] * k + [1] * (p - k)
        expect = None
    else:
        raise ParameterError(f"unknown family {family!r}")

    f = Labelling.from_bits(bits)
    st = stats(g, f)
    if expect is not None:
        if (st.v_diff, st.e_diff) != expect:
            raise DefectError(
                f"{family} witness reached ({st.v_diff},{st.e_diff}), "
                f"expected {expect}"
            )
    elif family == "complete":
        d1, _, _ = closed_form_complete(spec.n)
        if st.delta_v + st.delta_e != d1.value:
            raise DefectError(
                f"complete witness reached {st.delta_v + st.delta_e}, "
                f"expected {d1.value}"
            )
    else:
        s = sum(1 for p in spec.parts if p % 2)
        if st.delta_v != s % 2 or st.delta_e != s // 2:
            raise DefectError(
                f"multipartite witness reached ({st.delta_v},{st.delta_e}), "
                f"expected ({s % 2},{s // 2})"
            )
    return f
