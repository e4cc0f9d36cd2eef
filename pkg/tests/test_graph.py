import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from commondeg.generators import complete_bipartite, complete_graph, cycle_graph, mobius_ladder, path_graph
from commondeg.graph import (
    Graph,
    GraphFormatError,
    common_neighbors,
    format_edge_list,
    from_edge_list,
    from_graph6,
    from_json_dict,
    induced_subgraph,
    neighbors,
    parse_edge_list,
    to_graph6,
    to_json_dict,
)
from oracles import naive_common_neighbors


@st.composite
def graphs(draw, max_n=14):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.num_edges() == 3
    assert g == complete_graph(3)


def test_from_edge_list_c5_and_duplicates():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 0)])
    assert g.num_edges() == 5
    assert g == cycle_graph(5)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 2)], [(-1, 0)]])
def test_from_edge_list_rejects_loops_and_range(edges):
    with pytest.raises(ValueError):
        from_edge_list(2, edges)


def test_graph_invariants_hold():
    g = mobius_ladder()
    for u in range(g.n):
        assert not g.rows[u] >> u & 1
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert g.num_edges() == sum(r.bit_count() for r in g.rows) // 2 == 12


def test_graph6_k5_against_networkx():
    g = from_graph6("D~{")
    ref = nx.from_graph6_bytes(b"D~{")
    assert g.n == 5
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    assert g == complete_graph(5)
    assert to_graph6(g) == "D~{"


@pytest.mark.parametrize("g", [cycle_graph(5), complete_graph(4), Graph(0, []), mobius_ladder(), path_graph(1)])
def test_graph6_round_trip_named(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    assert to_graph6(from_graph6(s)) == s


def test_graph6_empty_graph_and_c5_length():
    assert to_graph6(Graph(0, [])) == "?"
    assert len(to_graph6(cycle_graph(5))) >= 3


@pytest.mark.parametrize("bad", ["", "D~", "D~{{", "D~\x7f", "D ~{", "~??"])
def test_graph6_errors(bad):
    with pytest.raises(GraphFormatError):
        from_graph6(bad)


def test_graph6_long_headers_match_networkx():
    rng = random.Random(7)
    for n in (63, 64, 100, 300):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.05]
        g = from_edge_list(n, edges)
        s = to_graph6(g)
        ref_graph = nx.empty_graph(n)
        ref_graph.add_edges_from(edges)
        ref = nx.to_graph6_bytes(ref_graph, header=False)
        assert s == ref.decode().strip()
        assert from_graph6(s) == g


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip_property(g):
    assert from_graph6(to_graph6(g)) == g
    ref = nx.from_graph6_bytes(to_graph6(g).encode())
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == sorted(g.edges())


def test_neighbors_examples():
    assert neighbors(cycle_graph(5), 0) == {1, 4}
    assert neighbors(complete_graph(4), 2) == {0, 1, 3}
    assert neighbors(Graph(4, [0] * 4), 3) == set()
    with pytest.raises(IndexError):
        neighbors(cycle_graph(5), 5)


def test_common_neighbors_examples():
    assert common_neighbors(cycle_graph(5), 0, 2) == {1}
    assert common_neighbors(mobius_ladder(), 0, 2) == {1}
    assert common_neighbors(complete_bipartite(3, 3), 0, 1) == {3, 4, 5}
    with pytest.raises(ValueError):
        common_neighbors(cycle_graph(5), 2, 2)
    with pytest.raises(IndexError):
        common_neighbors(cycle_graph(5), 0, 9)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_common_neighbors_match_double_loop(g, data):
    if g.n < 2:
        return
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
    assert common_neighbors(g, u, v) == naive_common_neighbors(g, u, v)
    assert common_neighbors(g, u, v) == neighbors(g, u) & neighbors(g, v)


def test_induced_subgraph_examples():
    p = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert p.n == 3 and p.num_edges() == 2
    assert induced_subgraph(mobius_ladder(), set()).n == 0
    assert induced_subgraph(complete_graph(4), {0, 2, 3}) == complete_graph(3)
    with pytest.raises(IndexError):
        induced_subgraph(cycle_graph(5), {7})


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_induced_subgraph_preserves_adjacency(g, data):
    vs = sorted(data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else [])
    h = induced_subgraph(g, vs)
    for i, u in enumerate(vs):
        for j, v in enumerate(vs):
            assert h.has_edge(i, j) == g.has_edge(u, v)


def test_edge_list_and_json_round_trip():
    g = mobius_ladder()
    assert parse_edge_list(format_edge_list(g)) == g
    assert from_json_dict(to_json_dict(g)) == g
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("2 1\n0 0\n")


def test_graphs_are_hashable_values():
    assert len({cycle_graph(5), from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])}) == 1
    with pytest.raises(ValueError):
        Graph.from_rows([0b10, 0b00])
