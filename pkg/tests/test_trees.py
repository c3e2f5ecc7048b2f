"""Tree labelling construction: guarantee checks across many shapes."""

from __future__ import annotations

import random

import pytest

from cordiality import (
    Graph,
    StructureError,
    cycle_spec,
    generate,
    path_spec,
    random_tree,
    solve_exact,
    star_spec,
    stats,
    tree_optimal_labelling,
)


def _check_guarantee(g):
    f = tree_optimal_labelling(g)
    st = stats(g, f)
    assert st.v_diff == g.n % 2
    if g.n % 2 == 1:
        assert st.e_diff == 0
    else:
        assert abs(st.e_diff) == 1
    assert st.delta_v + st.delta_e == 1
    return f, st


def test_single_edge():
    g = Graph.from_edges(2, [(0, 1)])
    f, st = _check_guarantee(g)
    assert sorted(f.bits) == [0, 1]
    assert (st.delta_v, st.delta_e) == (0, 1)


def test_three_vertex_path():
    f, st = _check_guarantee(generate(path_spec(3)))
    assert (st.delta_v, st.delta_e) == (1, 0)


def test_star_with_eight_leaves():
    g = generate(star_spec(8))
    f, st = _check_guarantee(g)
    assert (st.delta_v, st.delta_e) == (1, 0)
    res = solve_exact(g)
    assert (res.d1, res.d2) == (1, 0)


def test_paths_and_stars_up_to_20():
    for n in range(1, 21):
        _check_guarantee(generate(path_spec(n)))
        _check_guarantee(generate(star_spec(n)))


def test_caterpillars_and_brooms():
    # spine with pendant tufts: many equal-label attachment collisions
    for spine in range(2, 8):
        for tuft in range(1, 4):
            edges = [(i, i + 1) for i in range(spine - 1)]
            nxt = spine
            for i in range(spine):
                for _ in range(tuft):
                    edges.append((i, nxt))
                    nxt += 1
            _check_guarantee(Graph.from_edges(nxt, edges))


def test_random_trees_agree_with_solver():
    rng = random.Random(9000)
    for _ in range(60):
        n = rng.randint(1, 14)
        g = random_tree(n, rng.getrandbits(60))
        _check_guarantee(g)
        res = solve_exact(g)
        assert res.d1 == 1
        assert res.d2 == 1 - n % 2


def test_rejects_non_trees():
    with pytest.raises(StructureError):
        tree_optimal_labelling(generate(cycle_spec(4)))
    with pytest.raises(StructureError):
        tree_optimal_labelling(Graph.empty(3))
    with pytest.raises(StructureError):
        tree_optimal_labelling(Graph.empty(0))
