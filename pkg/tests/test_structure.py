from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from chromsym import graph as G
from chromsym.fourvertex import FourVertexKind as K, classify_four_subset
from chromsym.graph import from_edges
from chromsym.structure import (
    ComponentShape,
    PreconditionError,
    claw_triangle_free_shape,
    decompose_peculiar,
    independence_number,
    is_complete_multipartite,
    is_peculiar,
    maximum_stable_set,
)

from conftest import brute_alpha, graphs, to_nx

CLAW = from_edges(4, [(0, 1), (0, 2), (0, 3)])
PAW = from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def test_independence_examples():
    assert independence_number(CLAW) == 3
    assert independence_number(G.complete(5)) == 1
    assert independence_number(G.three_sun()) == brute_alpha(G.three_sun()) == 3


@given(graphs(max_n=9))
@settings(max_examples=120, deadline=None)
def test_independence_matches_brute_force(g):
    s = maximum_stable_set(g)
    assert G.is_stable(g, sum(1 << v for v in s))
    assert len(s) == independence_number(g) == brute_alpha(g)


def test_multipartite_examples():
    assert is_complete_multipartite(G.cycle(4)) == (True, [2, 2])
    assert is_complete_multipartite(PAW)[0] is False
    assert is_complete_multipartite(G.complete(5)) == (True, [1] * 5)


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_multipartite_via_complement(g):
    # complete multipartite iff the complement is a disjoint union of cliques
    co = to_nx(G.complement(g))
    expected = all(co.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2
                   for c in nx.connected_components(co))
    ok, parts = is_complete_multipartite(g)
    assert ok == expected
    if ok:
        assert sum(parts) == g.n and parts == sorted(parts, reverse=True)


def test_shape_examples():
    assert claw_triangle_free_shape(G.path(5)) == [ComponentShape("path", 5)]
    g = G.cycle(4).disjoint_union(G.path(2))
    assert claw_triangle_free_shape(g) == [ComponentShape("cycle", 4), ComponentShape("path", 2)]
    with pytest.raises(PreconditionError) as info:
        claw_triangle_free_shape(CLAW)
    assert classify_four_subset(CLAW, info.value.witness) is K.CLAW


def test_pyramid_decompositions():
    assert decompose_peculiar(G.generalized_pyramid(1, 1, 1)).oval_sizes == (1, 1, 1)
    assert sorted(decompose_peculiar(G.generalized_pyramid(2, 2, 1)).oval_sizes) == [1, 2, 2]
    for p, q, r in [(1, 1, 0), (3, 1, 0), (2, 2, 2), (3, 2, 1)]:
        g = G.generalized_pyramid(p, q, r)
        dec = decompose_peculiar(g)
        dec.validate(g)
        assert sorted(dec.oval_sizes) == sorted((p, q, r))
        assert is_peculiar(g)


def test_three_sun_is_not_peculiar():
    sun = G.three_sun()
    assert not is_peculiar(sun)
    with pytest.raises(PreconditionError, match="co-diamond") as info:
        decompose_peculiar(sun)
    assert classify_four_subset(sun, info.value.witness) is K.CO_DIAMOND
