import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import alpha_brute, has_triangle_brute, random_graph
from regramsey.blowup import c5_blowup
from regramsey.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_graph6,
    is_regular,
    is_triangle_free,
    max_degree,
    min_degree,
    path_graph,
    petersen_graph,
    read_graph,
    star_graph,
    to_edge_list,
    to_graph6,
    write_graph,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


def test_add_edge_single():
    g = empty_graph(2).add_edge(0, 1)
    assert g.edge_count == 1 and g.has_edge(1, 0)


def test_add_chord_raises_degree():
    g = cycle_graph(4).add_edge(0, 2)
    assert g.degree(0) == 3


@pytest.mark.parametrize("edge", [(0, 1), (1, 0)])
def test_duplicate_edge_rejected(edge):
    g = empty_graph(2).add_edge(0, 1)
    with pytest.raises(GraphError):
        g.add_edge(*edge)


@pytest.mark.parametrize("edge", [(0, 2), (-1, 0), (1, 1)])
def test_bad_edges_rejected(edge):
    with pytest.raises(GraphError):
        empty_graph(2).add_edge(*edge)


@pytest.mark.parametrize(
    "g, expected",
    [(cycle_graph(5), (2, 2)), (star_graph(4), (4, 1)), (empty_graph(3), (0, 0))],
)
def test_degree_extremes(g, expected):
    assert (max_degree(g), min_degree(g)) == expected


def test_degree_of_empty_graph_is_error():
    with pytest.raises(GraphError):
        max_degree(Graph(0))


def test_triangle_examples():
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(petersen_graph())
    assert is_triangle_free(c5_blowup(25))
    assert not has_triangle_brute(petersen_graph())


def test_disjoint_union_examples():
    cc = disjoint_union(cycle_graph(5), cycle_graph(5))
    assert (cc.n, is_regular(cc), alpha_brute(cc)) == (10, 2, 4)
    assert disjoint_union(empty_graph(3), empty_graph(2)) == empty_graph(5)
    pp = disjoint_union(petersen_graph(), petersen_graph())
    assert pp.n == 20 and is_regular(pp) == 3 and is_triangle_free(pp)


def test_is_regular_examples():
    assert is_regular(cycle_graph(9)) == 2
    assert is_regular(path_graph(3)) is None
    assert is_regular(empty_graph(7)) == 0


@given(graphs())
def test_triangle_free_matches_brute_force(g):
    assert is_triangle_free(g) == (not has_triangle_brute(g))


def test_triangle_free_random_sample():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng.randint(0, 12), rng.random() * 0.6, rng)
        assert is_triangle_free(g) == (not has_triangle_brute(g))


@given(graphs(), graphs())
def test_union_edge_count_and_invariants(g1, g2):
    u = disjoint_union(g1, g2)
    u.check_invariants()
    assert u.edge_count == g1.edge_count + g2.edge_count
    assert u.n == g1.n + g2.n


@given(graphs(max_n=20))
@settings(max_examples=60)
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert to_graph6(g) == expected
    assert from_graph6(expected) == g


def test_graph6_large_order_round_trip():
    g = c5_blowup(100)
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


def test_graph6_known_strings():
    # reference encodings: K4 is "C~", the empty graph on 0 vertices is "?"
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(Graph(0)) == "?"


@given(graphs())
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


def test_edge_list_without_header_drops_trailing_isolated_vertices():
    g = Graph.from_edges(5, [(0, 1)])
    assert from_edge_list(to_edge_list(g, header=False)).n == 2


def test_edge_list_rejects_garbage():
    with pytest.raises(GraphError):
        from_edge_list("# n=3\n0 1 2\n")
    with pytest.raises(GraphError):
        from_edge_list("# n=2\n0 5\n")


@pytest.mark.parametrize("fmt", ["edges", "g6"])
def test_file_round_trip(tmp_path, fmt):
    g = petersen_graph()
    path = tmp_path / f"g.{fmt}"
    write_graph(g, path, fmt)
    assert read_graph(path) == g


def test_equality_is_by_edge_set_not_isomorphism():
    assert path_graph(3) != Graph.from_edges(3, [(0, 2), (2, 1)])
    assert path_graph(3) == Graph.from_edges(3, [(1, 2), (0, 1)])
