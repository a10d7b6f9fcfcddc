from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from chromsym import graph as G
from chromsym.fourvertex import (
    FourVertexKind as K,
    classify_four_subset,
    find_induced,
    freeness_profile,
    is_h_free,
    parse_kinds,
)
from chromsym.graph import from_edges

from conftest import PROTOTYPE_EDGES, brute_h_free, graphs, induced_kind_nx

CLAW = from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_eleven_kinds_and_complements():
    assert len(K) == 11
    pairs = {K.K4: K.FOUR_K1, K.DIAMOND: K.CO_DIAMOND, K.C4: K.TWO_K2,
             K.PAW: K.CO_PAW, K.CLAW: K.CO_CLAW, K.P4: K.P4}
    for a, b in pairs.items():
        assert a.complement is b and b.complement is a
    for kind in K:
        assert classify_four_subset(G.complement(kind.prototype), range(4)) is kind.complement


def test_prototypes_match_hand_drawings():
    for name, edges in PROTOTYPE_EDGES.items():
        assert classify_four_subset(from_edges(4, edges), (0, 1, 2, 3)) is K.parse(name)


def test_classify_examples():
    assert classify_four_subset(CLAW, (0, 1, 2, 3)) is K.CLAW
    assert classify_four_subset(G.complete(4), (0, 1, 2, 3)) is K.K4
    sun = G.three_sun()
    # pendant 5 on triangle vertex 4, plus the other two pendants 0 and 3
    assert classify_four_subset(sun, (0, 3, 4, 5)) is K.CO_DIAMOND


def test_three_sun_freeness():
    sun = G.three_sun()
    ok, witness = is_h_free(sun, [K.CLAW, K.K4, K.DIAMOND, K.C4, K.FOUR_K1, K.TWO_K2, K.CO_CLAW])
    assert ok and witness is None
    ok, witness = is_h_free(sun, [K.CO_DIAMOND])
    assert not ok
    assert classify_four_subset(sun, witness) is K.CO_DIAMOND
    assert brute_h_free(sun, {"co-diamond"}) is False


def test_small_graphs_always_free():
    assert is_h_free(G.complete(3), list(K)) == (True, None)


def test_parse_kinds():
    assert parse_kinds("claw, co-paw,P4") == [K.CLAW, K.CO_PAW, K.P4]
    with pytest.raises(ValueError, match="unknown"):
        parse_kinds("claw,bogus")


@given(graphs(min_n=4, max_n=7))
@settings(max_examples=60, deadline=None)
def test_classification_matches_networkx(g):
    for s in combinations(range(g.n), 4):
        assert classify_four_subset(g, s).value == induced_kind_nx(g, s)


@given(graphs(min_n=4, max_n=7))
@settings(max_examples=60, deadline=None)
def test_freeness_and_complement_duality(g):
    prof = freeness_profile(g)
    co = freeness_profile(G.complement(g))
    for kind in K:
        assert prof[kind] == co[kind.complement]
        w = find_induced(g, [kind])
        assert (w is None) == prof[kind]
        if w is not None:
            assert classify_four_subset(g, w) is kind
