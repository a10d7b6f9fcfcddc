"""The eleven four-vertex graphs and induced-subgraph (H-free) testing."""

from __future__ import annotations

import enum
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .graph import Graph


class FourVertexKind(enum.Enum):
    P4 = "P4"
    K4 = "K4"
    DIAMOND = "diamond"
    C4 = "C4"
    PAW = "paw"
    CLAW = "claw"
    FOUR_K1 = "4K1"
    CO_DIAMOND = "co-diamond"
    TWO_K2 = "2K2"
    CO_PAW = "co-paw"
    CO_CLAW = "co-claw"

    @property
    def complement(self) -> "FourVertexKind":
        return _COMPLEMENT[self]

    @property
    def prototype(self) -> Graph:
        return Graph._trusted(4, _prototype_rows(_PROTOTYPE_EDGES[self]))

    @classmethod
    def parse(cls, name: str) -> "FourVertexKind":
        key = name.strip().lower().replace("_", "-")
        for kind in cls:
            if kind.value.lower() == key or kind.name.lower().replace("_", "-") == key:
                return kind
        raise ValueError(f"unknown four-vertex graph {name!r}; expected one of "
                         + ", ".join(k.value for k in cls))


K = FourVertexKind

_COMPLEMENT = {
    K.K4: K.FOUR_K1, K.FOUR_K1: K.K4,
    K.DIAMOND: K.CO_DIAMOND, K.CO_DIAMOND: K.DIAMOND,
    K.C4: K.TWO_K2, K.TWO_K2: K.C4,
    K.PAW: K.CO_PAW, K.CO_PAW: K.PAW,
    K.CLAW: K.CO_CLAW, K.CO_CLAW: K.CLAW,
    K.P4: K.P4,
}

_PROTOTYPE_EDGES = {
    K.P4: [(0, 1), (1, 2), (2, 3)],
    K.K4: [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    K.DIAMOND: [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)],
    K.C4: [(0, 1), (1, 2), (2, 3), (0, 3)],
    K.PAW: [(0, 1), (1, 2), (1, 3), (2, 3)],
    K.CLAW: [(0, 1), (0, 2), (0, 3)],
    K.FOUR_K1: [],
    K.CO_DIAMOND: [(2, 3)],
    K.TWO_K2: [(0, 1), (2, 3)],
    K.CO_PAW: [(0, 1), (1, 2)],
    K.CO_CLAW: [(0, 1), (0, 2), (1, 2)],
}

# bit i of a pattern <-> pair _PAIRS[i] of subset positions
_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def _prototype_rows(edges):
    rows = [0] * 4
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _pattern_edges(pattern: int) -> list[tuple[int, int]]:
    return [p for i, p in enumerate(_PAIRS) if pattern >> i & 1]


def _invariant(edges) -> tuple[int, tuple[int, ...], int]:
    deg = [0] * 4
    es = set()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        es.add((min(u, v), max(u, v)))
    tri = sum(1 for a, b, c in combinations(range(4), 3)
              if (a, b) in es and (a, c) in es and (b, c) in es)
    return len(es), tuple(sorted(deg, reverse=True)), tri


def _canon_pattern(edges) -> tuple:
    # brute-force isomorphism class: least relabelled edge set over all 24 maps
    return min(
        (tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
         for p in permutations(range(4))),
    )


def _build_pattern_table() -> tuple[FourVertexKind, ...]:
    by_invariant = {_invariant(e): k for k, e in _PROTOTYPE_EDGES.items()}
    by_shape = {_canon_pattern(e): k for k, e in _PROTOTYPE_EDGES.items()}
    if len(by_invariant) != 11 or len(by_shape) != 11:
        raise AssertionError("four-vertex prototypes are not pairwise distinguishable")
    table = []
    for pattern in range(64):
        edges = _pattern_edges(pattern)
        kind = by_invariant[_invariant(edges)]
        if by_shape[_canon_pattern(edges)] is not kind:
            raise AssertionError(f"invariant triple misclassifies pattern {pattern:06b}")
        table.append(kind)
    return tuple(table)


_PATTERN_KIND = _build_pattern_table()


def _pattern(adj: Sequence[int], a: int, b: int, c: int, d: int) -> int:
    ra, rb, rc = adj[a], adj[b], adj[c]
    return ((ra >> b & 1) | (ra >> c & 1) << 1 | (ra >> d & 1) << 2
            | (rb >> c & 1) << 3 | (rb >> d & 1) << 4 | (rc >> d & 1) << 5)


def classify_four_subset(g: Graph, s: Iterable[int]) -> FourVertexKind:
    verts = list(s)
    if len(verts) != 4 or len(set(verts)) != 4:
        raise ValueError(f"need 4 distinct vertices, got {verts}")
    if any(not 0 <= v < g.n for v in verts):
        raise ValueError(f"subset {verts} has vertices outside the graph")
    return _PATTERN_KIND[_pattern(g.adj, *verts)]


def _kind_mask(kinds: Iterable[FourVertexKind]) -> list[bool]:
    wanted = set(kinds)
    return [k in wanted for k in _PATTERN_KIND]


def find_induced(g: Graph, kinds: Iterable[FourVertexKind],
                 through: int | None = None) -> tuple[int, int, int, int] | None:
    """Lexicographically first 4-subset inducing one of ``kinds``.

    With ``through`` set, only subsets containing that vertex are examined.
    """
    hit = _kind_mask(kinds)
    if not any(hit):
        return None
    adj = g.adj
    if through is None:
        for s in combinations(range(g.n), 4):
            if hit[_pattern(adj, *s)]:
                return s
        return None
    others = [v for v in range(g.n) if v != through]
    for trio in combinations(others, 3):
        s = tuple(sorted(trio + (through,)))
        if hit[_pattern(adj, *s)]:
            return s
    return None


def is_h_free(g: Graph, kinds: Iterable[FourVertexKind]) -> tuple[bool, tuple[int, ...] | None]:
    """``(True, None)`` if no 4-subset induces a member of ``kinds``,
    else ``(False, witness)``."""
    witness = find_induced(g, kinds)
    return witness is None, witness


def freeness_profile(g: Graph) -> dict[FourVertexKind, bool]:
    """Map every kind to True when ``g`` is free of it."""
    present = set()
    adj = g.adj
    for s in combinations(range(g.n), 4):
        present.add(_PATTERN_KIND[_pattern(adj, *s)])
        if len(present) == 11:
            break
    return {k: k not in present for k in FourVertexKind}


def parse_kinds(text: str) -> list[FourVertexKind]:
    return [FourVertexKind.parse(tok) for tok in text.split(",") if tok.strip()]
