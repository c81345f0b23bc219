import random

import pytest

import regramsey.coloring as coloring_mod
from oracles import coloring_ok, exhaustive_equitable, random_graph
from regramsey.coloring import EquitableColoring, equitable_color, verify_equitable
from regramsey.graph import (
    Graph,
    GraphError,
    complete_bipartite,
    cycle_graph,
    empty_graph,
    max_degree,
    petersen_graph,
)


def test_c5_three_colors():
    col = equitable_color(cycle_graph(5), 3)
    assert sorted(col.sizes()) == [1, 2, 2]
    assert coloring_ok(cycle_graph(5), col.color_of, 3)


def test_edgeless_two_colors():
    col = equitable_color(empty_graph(4), 2)
    assert col.sizes() == [2, 2]


def test_c9_three_colors():
    g = cycle_graph(9)
    col = equitable_color(g, 3)
    assert col.sizes() == [3, 3, 3]
    assert coloring_ok(g, col.color_of, 3)


def test_verify_examples():
    residues = EquitableColoring(tuple(v % 3 for v in range(9)), 3)
    assert verify_equitable(cycle_graph(9), residues)
    assert not verify_equitable(cycle_graph(5), EquitableColoring((0,) * 5, 1))
    assert not verify_equitable(empty_graph(5), EquitableColoring((0, 0, 0, 0, 1), 2))


def test_too_few_colors_is_error():
    with pytest.raises(GraphError):
        equitable_color(cycle_graph(5), 2)


def test_classes_invert_color_of():
    g = petersen_graph()
    col = equitable_color(g, 4, seed=3)
    for k, members in enumerate(col.classes):
        assert all(col.color_of[v] == k for v in members)
    assert sorted(v for cls in col.classes for v in cls) == list(range(g.n))


def test_deterministic_for_fixed_seed():
    g = random_graph(40, 0.15, random.Random(2))
    c = max_degree(g) + 1
    assert equitable_color(g, c, seed=9) == equitable_color(g, c, seed=9)


@pytest.mark.parametrize("a, b", [(3, 5), (2, 7), (4, 4), (1, 6)])
def test_complete_bipartite_hard_cases(a, b):
    g = complete_bipartite(a, b)
    col = equitable_color(g, max_degree(g) + 1)
    assert coloring_ok(g, col.color_of, col.c)


def test_spread_is_at_most_one_not_two():
    rng = random.Random(4)
    for _ in range(100):
        g = random_graph(rng.randint(1, 50), rng.random() * 0.3, rng)
        sizes = equitable_color(g, max_degree(g) + 1 + rng.randint(0, 3)).sizes()
        assert max(sizes) - min(sizes) <= 1


def test_small_graphs_against_exhaustive_oracle():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 12)
        g = random_graph(n, rng.random() * 0.5, rng)
        c = max_degree(g) + 1
        assert exhaustive_equitable(g, c) is not None
        assert coloring_ok(g, equitable_color(g, c).color_of, c)


def test_fallback_path(monkeypatch):
    """When no shifting path exists the KKMS procedure takes over."""
    # greedy leaves this graph unbalanced, so rebalancing is needed
    g = Graph.from_edges(9, [(0, 2), (1, 3), (1, 8), (2, 4), (3, 6), (4, 7), (5, 8)])
    calls = []
    real = coloring_mod._kkms_fallback
    monkeypatch.setattr(coloring_mod._State, "shift_path", lambda self, hi, lo: False)
    monkeypatch.setattr(coloring_mod, "_kkms_fallback", lambda g, c: calls.append(c) or real(g, c))
    col = equitable_color(g, 3)
    assert calls == [3]
    assert coloring_ok(g, col.color_of, 3)
