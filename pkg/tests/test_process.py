import math
import random

import pytest

from oracles import contains_copy_through, random_graph
from regramsey.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    is_triangle_free,
    path_graph,
)
from regramsey.process import (
    K3,
    ForbiddenPattern,
    TriangleFreeProcess,
    creates_copy,
    is_maximal_triangle_free,
    open_pairs_count,
    run_process,
    trajectory_csv,
)

C4 = ForbiddenPattern.parse("C4")


def test_path_closing_edge_creates_triangle():
    assert creates_copy(path_graph(3), (0, 2), K3)


def test_every_c5_chord_creates_triangle():
    g = cycle_graph(5)
    for chord in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]:
        assert creates_copy(g, chord, K3)


def test_c4_diagonal_creates_no_new_c4():
    g = cycle_graph(4)
    assert not creates_copy(g, (0, 2), C4)
    assert not contains_copy_through(g, (0, 2), C4.h)


def test_creates_copy_rejects_existing_edge():
    with pytest.raises(GraphError):
        creates_copy(path_graph(3), (0, 1), K3)


@pytest.mark.parametrize("name", ["K3", "C4", "C5", "K4"])
def test_copy_detection_matches_enumeration(name):
    pattern = ForbiddenPattern.parse(name)
    rng = random.Random(len(name))
    for _ in range(40):
        g = random_graph(6, 0.4, rng)
        for u in range(6):
            for v in range(u + 1, 6):
                if not g.has_edge(u, v):
                    assert creates_copy(g, (u, v), pattern) == contains_copy_through(g, (u, v), pattern.h)


def test_pattern_validation():
    with pytest.raises(GraphError):
        ForbiddenPattern(empty_graph(3))
    with pytest.raises(GraphError):
        ForbiddenPattern(complete_graph(9))
    with pytest.raises(GraphError):
        ForbiddenPattern.parse("P4")


def test_two_vertices_one_edge():
    res = run_process(2, K3, seed=1)
    assert res.steps == 1 and res.final_graph.edge_count == 1


@pytest.mark.parametrize("seed", range(10))
def test_three_vertices_two_edges(seed):
    assert run_process(3, K3, seed).steps == 2


def test_single_vertex():
    res = run_process(1, K3, 0)
    assert res.steps == 0 and res.trajectory == []


def test_hundred_vertices_maximal():
    g = run_process(100, K3, seed=17).final_graph
    assert is_triangle_free(g)
    adj = g.adj
    for u in range(100):
        for v in range(u + 1, 100):
            if v not in adj[u]:
                assert adj[u] & adj[v]


def test_determinism():
    a, b = run_process(150, K3, 5), run_process(150, K3, 5)
    assert a.edge_order == b.edge_order
    assert run_process(150, K3, 6).edge_order != a.edge_order


def test_trajectory_matches_replay():
    res = run_process(60, K3, seed=2)
    assert len(res.trajectory) == res.steps
    g = Graph(60)
    for rec, (u, v) in zip(res.trajectory, res.edge_order):
        g.add_edge(u, v)
        degs = g.degrees()
        assert (rec.max_deg, rec.min_deg) == (max(degs), min(degs))
        assert rec.open_pairs == open_pairs_count(g)
    assert g == res.final_graph


def test_open_pool_equals_recomputation():
    for seed in range(4):
        n = 40 + 50 * seed
        proc = TriangleFreeProcess(n, random.Random(seed))
        rng = random.Random(100 + seed)
        checkpoints = set(rng.sample(range(1, 400), 8))
        step = 0
        while proc.step() is not None:
            step += 1
            if step in checkpoints:
                g = proc.graph
                fresh = {
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if v not in g.adj[u] and g.adj[u].isdisjoint(g.adj[v])
                }
                assert proc.open_pairs() == fresh


def test_generic_process_is_maximal():
    c4 = ForbiddenPattern.parse("C4")
    res = run_process(12, c4, seed=3)
    g = res.final_graph
    assert run_process(12, c4, seed=3).edge_order == res.edge_order
    for u in range(12):
        for v in range(u + 1, 12):
            if not g.has_edge(u, v):
                assert creates_copy(g, (u, v), c4)
            else:
                assert not contains_copy_through(g.copy().remove_edge(u, v), (u, v), c4.h)


def test_open_pairs_examples():
    assert open_pairs_count(empty_graph(4)) == 6
    assert open_pairs_count(cycle_graph(5)) == 0
    assert open_pairs_count(path_graph(3)) == 0
    with pytest.raises(GraphError):
        open_pairs_count(complete_graph(3))


def test_maximal_predicate():
    assert is_maximal_triangle_free(cycle_graph(5))
    assert not is_maximal_triangle_free(path_graph(4))


def test_trajectory_csv_layout():
    text = trajectory_csv(run_process(5, K3, 0))
    lines = text.splitlines()
    assert lines[0] == "step,max_deg,min_deg,open_pairs"
    assert lines[-1].endswith(",0")


def test_snapshot_prefix():
    res = run_process(30, K3, 4)
    assert res.snapshot(0) == empty_graph(30)
    assert res.snapshot(res.steps) == res.final_graph
    assert res.snapshot(5).edge_count == 5
    with pytest.raises(IndexError):
        res.snapshot(res.steps + 1)


@pytest.mark.parametrize("n", [400, 800])
def test_degree_envelopes(n):
    g = run_process(n, K3, seed=n).final_graph
    degs = g.degrees()
    hi, lo = max(degs), min(degs)
    assert hi <= 5 * math.sqrt(n * math.log(n))
    assert hi - lo <= hi / 2
