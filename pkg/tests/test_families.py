from __future__ import annotations

import pytest

from chromsym import graph as G
from chromsym.canonical import canonical_key
from chromsym.csf import csf
from chromsym.families import (
    BASE_CASES,
    DIAMOND_VARIANT,
    CaseSpec,
    EnumerationLimitError,
    enumerate_graphs,
    generate_peculiar_cases,
    k4_oval_bound_check,
    pyramid_sweep,
    run_case_check,
)
from chromsym.fourvertex import FourVertexKind as K
from chromsym.graph6 import decode
from chromsym.symfun import is_positive

from conftest import brute_h_free


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_match_atlas(atlas, n):
    ours = enumerate_graphs(n)
    assert len(ours) == len(atlas[n])
    assert {canonical_key(g) for g in ours} == {canonical_key(g) for g in atlas[n]}


def test_known_counts():
    assert [len(enumerate_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert len(enumerate_graphs(8)) == 12346


@pytest.mark.parametrize("names", [("claw",), ("claw", "paw"), ("claw", "co-paw"), ("claw", "P4"),
                                   ("C4", "2K2"), ("claw", "co-diamond")])
def test_h_free_enumeration_matches_filter(atlas, names):
    kinds = [K.parse(x) for x in names]
    for n in range(1, 7):
        expected = {canonical_key(g) for g in atlas[n] if brute_h_free(g, set(names))}
        assert {canonical_key(g) for g in enumerate_graphs(n, kinds)} == expected


def test_enumeration_limits():
    with pytest.raises(EnumerationLimitError):
        enumerate_graphs(10)
    with pytest.raises(EnumerationLimitError):
        enumerate_graphs(13, allow_large=True)


def test_case_generation_examples():
    assert len(list(generate_peculiar_cases(CaseSpec((1, 1, 0), require_triangle=False)))) == 2
    assert len(list(generate_peculiar_cases(CaseSpec((2, 2, 2), require_triangle=False)))) == 2 ** 12
    full = [cg for cg in generate_peculiar_cases(CaseSpec((1, 1, 1))) if len(cg.inter_edges) == 3]
    assert len(full) == 1
    assert canonical_key(full[0].graph) == canonical_key(G.generalized_pyramid(1, 1, 1))
    assert {s: CaseSpec(s).oval_edges_allowed for s in BASE_CASES} == BASE_CASES


def test_non_stable_ovals_never_survive_diamond_filter():
    for sizes in BASE_CASES:
        spec = CaseSpec(sizes, DIAMOND_VARIANT, require_triangle=False, stable_ovals=False)
        assert not [cg for cg in generate_peculiar_cases(spec) if cg.intra_edges]


def test_case_check_report():
    rep = run_case_check()
    assert rep.all_e_positive and rep.claw_codiamond_all_e_positive
    assert rep.conventions == {"raw_union": 26, "raw_sum": 46, "isomorphism_classes": 10,
                               "claw_codiamond_configurations": 36}
    assert rep.matches_36 == ["claw_codiamond_configurations"]
    assert rep.elapsed < 60
    # every reported survivor really passes one of the filters
    for case in rep.per_case:
        assert case["survivors"] == len(case["graphs"])


def test_pyramid_sweep_rows():
    rows = pyramid_sweep(8)
    assert any((r.p, r.q, r.r) == (1, 1, 0) for r in rows)
    row = next(r for r in rows if (r.p, r.q, r.r) == (1, 1, 1))
    assert row.e_positive == is_positive(csf(G.generalized_pyramid(1, 1, 1)).e_expansion)[0]


def test_k4_bound():
    rep = k4_oval_bound_check()
    assert rep.counts[6] == 0
    c5 = canonical_key(G.cycle(5))
    assert c5 in {canonical_key(decode(w)) for w in rep.witnesses_5}
    assert rep.max_oval == 5 and rep.vertex_bound == 18
