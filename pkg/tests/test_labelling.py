"""stats() against hand-enumerated values, plus its algebraic invariants."""

from __future__ import annotations

import random

import pytest
from conftest import random_graph, random_labelling_bits

from cordiality import (
    Labelling,
    ParameterError,
    complete_spec,
    cycle_spec,
    generate,
    stats,
)


def test_c4_half_and_half():
    # C4 with 0,0,1,1: edges 01->0, 12->1, 23->0, 30->1 by hand
    g = generate(cycle_spec(4))
    st = stats(g, Labelling.from_bitstring("0011"))
    assert (st.v0, st.v1, st.e0, st.e1) == (2, 2, 2, 2)
    assert (st.delta_v, st.delta_e) == (0, 0)


def test_complete_all_zeros():
    for n in (1, 2, 5, 9):
        g = generate(complete_spec(n))
        st = stats(g, Labelling.from_bits([0] * n))
        assert (st.v0, st.e0, st.e1) == (n, n * (n - 1) // 2, 0)


def test_k4_balanced_imbalance():
    # |e0 - e1| = |(n-2k)^2 - n| / 2 with n=4, k=2
    g = generate(complete_spec(4))
    st = stats(g, Labelling.from_bitstring("0011"))
    assert st.delta_v == 0
    assert st.delta_e == 2
    assert (st.e0, st.e1) == (2, 4)


def test_length_mismatch_rejected():
    g = generate(cycle_spec(4))
    with pytest.raises(ParameterError):
        stats(g, Labelling.from_bitstring("001"))


def test_bad_bits_rejected():
    with pytest.raises(ParameterError):
        Labelling.from_bits([0, 2, 1])
    with pytest.raises(ParameterError):
        Labelling.from_bitstring("01x")


def test_bitstring_roundtrip():
    f = Labelling.from_bitstring("01101")
    assert f.bitstring == "01101"
    assert list(f) == [0, 1, 1, 0, 1]
    assert f.complement().bitstring == "10010"


def test_complement_invariance_200_pairs():
    # v0/v1 swap, edge counts unchanged, both deltas invariant
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        f = Labelling.from_bits(random_labelling_bits(rng, n))
        a = stats(g, f)
        b = stats(g, f.complement())
        assert (a.v0, a.v1) == (b.v1, b.v0)
        assert (a.e0, a.e1) == (b.e0, b.e1)
        assert (a.delta_v, a.delta_e) == (b.delta_v, b.delta_e)


def test_parity_invariants():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        f = Labelling.from_bits(random_labelling_bits(rng, n))
        st = stats(g, f)
        assert st.v0 + st.v1 == g.n
        assert st.e0 + st.e1 == g.m
        assert st.delta_v % 2 == g.n % 2
        assert st.delta_e % 2 == g.m % 2
