from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from chromsym import graph as G
from chromsym.graph import Graph, GraphError, from_edges

from conftest import graphs, to_nx


def test_from_edges_claw():
    claw = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert claw.n == 4 and claw.m == 3
    assert claw.degree(0) == 3
    assert [claw.degree(v) for v in (1, 2, 3)] == [1, 1, 1]


def test_single_vertex():
    k1 = from_edges(1, [])
    assert k1.n == 1 and k1.m == 0
    assert G.path(1) == k1


def test_three_sun_matches_drawing():
    g = G.three_sun()
    assert g.n == 6 and g.m == 6
    assert list(g.edges()) == [(0, 1), (1, 2), (1, 4), (2, 3), (2, 4), (4, 5)]


def test_rejects_bad_input():
    with pytest.raises(GraphError):
        from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric


def test_immutable():
    g = G.path(3)
    with pytest.raises(AttributeError):
        g.n = 5


def test_complement_examples():
    assert G.complement(G.complete(4)) == G.empty(4)
    assert G.complement(G.complete(1)) == G.complete(1)
    paw = from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    p3_plus_k1 = nx.empty_graph(4)
    p3_plus_k1.add_edges_from([(0, 1), (1, 2)])
    assert nx.is_isomorphic(to_nx(G.complement(paw)), p3_plus_k1)


def test_components_examples():
    claw = from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert len(G.components(claw)) == 1
    assert len(G.components(from_edges(4, [(0, 1)]))) == 3
    assert len(G.components(G.empty(4))) == 4


def test_pyramid_111_shape():
    g = G.generalized_pyramid(1, 1, 1)
    assert g.n == 6
    co_triangle, ovals = [0, 1, 2], [3, 4, 5]
    assert G.is_stable(g, sum(1 << v for v in co_triangle))
    assert G.is_clique(g, sum(1 << v for v in ovals))
    for v in ovals:
        assert sum(1 for u in co_triangle if g.has_edge(u, v)) == 2


def test_edge_list_round_trip_and_errors():
    g = G.three_sun()
    assert G.parse_edge_list(G.format_edge_list(g)) == g
    with pytest.raises(GraphError, match="line 3"):
        G.parse_edge_list("3 2\n0 1\n1 x\n")
    with pytest.raises(GraphError, match="line 1"):
        G.parse_edge_list("3\n")


def test_parse_edge_lists_multiple():
    text = "2 1\n0 1\n\n# comment\n3 0\n"
    assert G.parse_edge_lists(text) == [G.complete(2), G.empty(3)]


@given(graphs())
@settings(max_examples=80, deadline=None)
def test_complement_involution_and_components(g):
    assert G.complement(G.complement(g)) == g
    comps = G.components(g)
    assert sorted(len(c) for c in comps) == sorted(len(c) for c in nx.connected_components(to_nx(g)))
    assert g.is_connected() == (len(comps) == 1)
    assert G.has_triangle(g) == (sum(nx.triangles(to_nx(g)).values()) > 0)


@given(graphs(max_n=5), graphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_disjoint_union_counts(a, b):
    u = a.disjoint_union(b)
    assert (u.n, u.m) == (a.n + b.n, a.m + b.m)
    assert u.induced(range(a.n)) == a
    assert u.induced(range(a.n, a.n + b.n)) == b
