"""Shared brute-force oracles.  None of these reuse the package's algorithms."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import prod

import networkx as nx
import pytest
from hypothesis import strategies as st

from chromsym.graph import Graph, from_edges

# The eleven four-vertex graphs, drawn by hand on vertices 0..3.
PROTOTYPE_EDGES = {
    "K4": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    "4K1": [],
    "diamond": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    "co-diamond": [(0, 1)],
    "C4": [(0, 1), (1, 2), (2, 3), (0, 3)],
    "2K2": [(0, 1), (2, 3)],
    "paw": [(0, 1), (0, 2), (1, 2), (2, 3)],
    "co-paw": [(0, 1), (1, 2)],
    "claw": [(0, 1), (0, 2), (0, 3)],
    "co-claw": [(0, 1), (0, 2), (1, 2)],
    "P4": [(0, 1), (1, 2), (2, 3)],
}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def atlas_by_size(max_n: int = 7) -> dict[int, list[Graph]]:
    """Every graph on 1..max_n vertices from the networkx atlas (n <= 7)."""
    out: dict[int, list[Graph]] = {}
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            out.setdefault(h.number_of_nodes(), []).append(from_nx(h))
    return out


def induced_kind_nx(g: Graph, four) -> str:
    sub = to_nx(g).subgraph(four)
    for name, edges in PROTOTYPE_EDGES.items():
        proto = nx.empty_graph(4)
        proto.add_edges_from(edges)
        if nx.is_isomorphic(sub, proto):
            return name
    raise AssertionError("unclassified four-vertex graph")


def brute_h_free(g: Graph, names) -> bool:
    return all(induced_kind_nx(g, s) not in names for s in combinations(range(g.n), 4))


def brute_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if len(vs) > best and all(not g.has_edge(u, v) for u, v in combinations(vs, 2)):
            best = len(vs)
    return best


def brute_csf_m(g: Graph) -> dict[tuple, int]:
    """Coefficient of m_lambda = proper colourings using colour i exactly lambda_i times."""
    n = g.n
    out: Counter = Counter()
    edges = list(g.edges())
    for col in product(range(n), repeat=n):
        if any(col[u] == col[v] for u, v in edges):
            continue
        counts = [col.count(c) for c in range(n)]
        lam = tuple(c for c in counts if c)
        if lam == tuple(sorted(lam, reverse=True)) and counts == list(lam) + [0] * (n - len(lam)):
            out[lam] += 1
    return dict(out)


def brute_csf_p(g: Graph) -> dict[tuple, int]:
    """Signed power-sum expansion by literally enumerating all 2^|E| subsets."""
    edges = list(g.edges())
    out: Counter = Counter()
    for mask in range(1 << len(edges)):
        h = nx.empty_graph(g.n)
        h.add_edges_from(e for i, e in enumerate(edges) if mask >> i & 1)
        lam = tuple(sorted((len(c) for c in nx.connected_components(h)), reverse=True))
        out[lam] += (-1) ** bin(mask).count("1")
    return {k: v for k, v in out.items() if v}


def brute_chromatic(g: Graph, k: int) -> int:
    edges = list(g.edges())
    return sum(1 for col in product(range(k), repeat=g.n) if all(col[u] != col[v] for u, v in edges))


# -- numeric evaluation of symmetric functions --------------------------------------

def eval_m(lam, xs) -> Fraction:
    k = len(xs)
    if len(lam) > k:
        return Fraction(0)
    padded = tuple(lam) + (0,) * (k - len(lam))
    return sum((Fraction(prod(x ** a for x, a in zip(xs, exps))) for exps in set(permutations(padded))),
               Fraction(0))


def eval_e(lam, xs) -> Fraction:
    return prod((sum((Fraction(prod(c)) for c in combinations(xs, r)), Fraction(0)) for r in lam),
                start=Fraction(1))


def eval_p(lam, xs) -> Fraction:
    return prod((sum((Fraction(x) ** r for x in xs), Fraction(0)) for r in lam), start=Fraction(1))


def ssyt(shape, max_entry):
    """All semistandard tableaux of ``shape`` with entries 1..max_entry."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]

    def fill(idx, tab):
        if idx == len(cells):
            yield dict(tab)
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, tab[(i, j - 1)])
        if i > 0:
            lo = max(lo, tab[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            tab[(i, j)] = v
            yield from fill(idx + 1, tab)
            del tab[(i, j)]

    yield from fill(0, {})


def brute_kostka(lam, mu) -> int:
    content = Counter({i + 1: c for i, c in enumerate(mu)})
    return sum(1 for t in ssyt(lam, len(mu)) if Counter(t.values()) == content)


def eval_s(lam, xs) -> Fraction:
    return sum((Fraction(prod(xs[v - 1] for v in t.values())) for t in ssyt(lam, len(xs))), Fraction(0))


EVAL = {"m": eval_m, "e": eval_e, "p": eval_p, "s": eval_s}


def eval_poly(f, xs) -> Fraction:
    return sum((c * EVAL[f.basis](lam, xs) for lam, c in f.terms()), Fraction(0))


# -- hypothesis strategies ----------------------------------------------------------

@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def atlas():
    return atlas_by_size(7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
