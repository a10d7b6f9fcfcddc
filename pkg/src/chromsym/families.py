"""Isomorph-free enumeration, graph6 I/O and the generators behind the
peculiar-graph case check, the generalized-pyramid sweep and the oval bound."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .canonical import automorphism_generators, canonical_form, canonical_key
from .csf import csf
from .fourvertex import FourVertexKind as K, find_induced
from .graph import Graph, bits, find_triangle, generalized_pyramid
from .graph6 import encode
from .structure import independence_number
from .symfun import is_positive

ENUM_LIMIT = 9
ENUM_HARD_LIMIT = 12


class EnumerationLimitError(ValueError):
    pass


# -- enumeration -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _level(n: int, kinds: frozenset) -> tuple[Graph, ...]:
    if n <= 1:
        return (Graph._trusted(n, [0] * n),)
    seen: dict[tuple[int, int], Graph] = {}
    new = n - 1
    for g in _level(n - 1, kinds):
        base = list(g.adj)
        for nbrs in _neighbourhood_reps(g):
            rows = [row | (1 << new) if nbrs >> v & 1 else row for v, row in enumerate(base)]
            rows.append(nbrs)
            child = Graph._trusted(n, rows)
            if kinds and find_induced(child, kinds, through=new) is not None:
                continue
            key = canonical_key(child)
            if key not in seen:
                seen[key] = child
    return tuple(canonical_form(seen[k])[0] for k in sorted(seen))


def _neighbourhood_reps(g: Graph) -> list[int]:
    """One neighbourhood subset per orbit under the known automorphisms of ``g``."""
    size = 1 << g.n
    gens = [gamma for gamma in automorphism_generators(g) if any(i != x for i, x in enumerate(gamma))]
    if not gens:
        return list(range(size))
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        for s in range(size):
            t = 0
            for v in bits(s):
                t |= 1 << gamma[v]
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [s for s in range(size) if find(s) == s]


def enumerate_graphs(n: int, free_of: Iterable[K] = (), allow_large: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Level ``n`` extends every class on ``n-1`` vertices by a new vertex with
    each possible neighbourhood and deduplicates by canonical form.  With
    ``free_of`` only graphs without those induced four-vertex subgraphs are
    kept; the class is hereditary, so pruning at every level is exact.
    """
    _check_limit(n, allow_large)
    return list(_level(n, frozenset(free_of)))


def _check_limit(n: int, allow_large: bool) -> None:
    limit = ENUM_HARD_LIMIT if allow_large else ENUM_LIMIT
    if n < 0 or n > limit:
        raise EnumerationLimitError(
            f"enumeration limited to n <= {limit}" + ("" if allow_large else " (pass allow_large to raise it)"))


def enumerate_up_to(n: int, free_of: Iterable[K] = (), start: int = 1,
                    allow_large: bool = False) -> Iterator[Graph]:
    """Graphs on ``start..n`` vertices, smallest first.  Limits are checked
    before anything is generated."""
    _check_limit(n, allow_large)
    free_of = tuple(free_of)
    return (g for k in range(start, n + 1) for g in enumerate_graphs(k, free_of, allow_large))


# -- peculiar base cases -----------------------------------------------------------

BASE_CASES = {
    (1, 1, 0): 1,
    (2, 1, 0): 2,
    (2, 2, 0): 4,
    (1, 1, 1): 3,
    (2, 1, 1): 5,
    (2, 2, 1): 8,
    (2, 2, 2): 12,
}


@dataclass(frozen=True)
class CaseSpec:
    """One placement of oval sizes ``(|S_ab|, |S_ac|, |S_bc|)``.

    ``stable_ovals=False`` additionally varies the edges inside each oval,
    for exploring beyond the cases where the ovals are forced to be stable.
    """

    oval_sizes: tuple[int, int, int]
    filter: frozenset = frozenset()
    require_triangle: bool = True
    stable_ovals: bool = True

    def __post_init__(self):
        if self.stable_ovals and self.oval_sizes not in BASE_CASES:
            raise ValueError(f"oval sizes {self.oval_sizes} are not one of the seven base cases")
        if min(self.oval_sizes) < 0 or sum(1 for s in self.oval_sizes if s) < 2 or max(self.oval_sizes) > 5:
            raise ValueError(f"invalid oval sizes {self.oval_sizes}")

    @property
    def oval_edges_allowed(self) -> int:
        p, q, r = self.oval_sizes
        return p * q + p * r + q * r


@dataclass(frozen=True)
class CaseGraph:
    graph: Graph
    oval_sizes: tuple[int, int, int]
    inter_edges: tuple[tuple[int, int], ...]
    intra_edges: tuple[tuple[int, int], ...] = ()


def _case_layout(sizes):
    attach = ((0, 1), (0, 2), (1, 2))
    ovals = []
    start = 3
    base_edges = []
    for (x, y), size in zip(attach, sizes):
        oval = list(range(start, start + size))
        ovals.append(oval)
        for v in oval:
            base_edges += [(x, v), (y, v)]
        start += size
    inter = [(u, v) for i, j in ((0, 1), (0, 2), (1, 2)) for u in ovals[i] for v in ovals[j]]
    intra = [(u, v) for oval in ovals for u, v in combinations(oval, 2)]
    return start, base_edges, inter, intra


def generate_peculiar_cases(spec: CaseSpec) -> Iterator[CaseGraph]:
    """Co-triangle ``a, b, c = 0, 1, 2`` plus the ovals, one graph per subset of
    the possible inter-oval edges (and intra-oval edges when ovals may be
    non-stable).  Graphs failing ``spec.filter`` or the triangle requirement
    are skipped."""
    n, base, inter, intra = _case_layout(spec.oval_sizes)
    optional = inter + ([] if spec.stable_ovals else intra)
    for mask in range(1 << len(optional)):
        chosen = [e for i, e in enumerate(optional) if mask >> i & 1]
        rows = [0] * n
        for u, v in base + chosen:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        g = Graph._trusted(n, rows)
        if spec.filter and find_induced(g, spec.filter) is not None:
            continue
        if spec.require_triangle and find_triangle(g) is None:
            continue
        inter_set = set(inter)
        yield CaseGraph(g, spec.oval_sizes,
                        tuple(e for e in chosen if e in inter_set),
                        tuple(e for e in chosen if e not in inter_set))


DIAMOND_VARIANT = frozenset({K.CLAW, K.CO_DIAMOND, K.DIAMOND})
CO_CLAW_VARIANT = frozenset({K.CLAW, K.CO_DIAMOND, K.CO_CLAW})
CLAW_CODIAMOND = frozenset({K.CLAW, K.CO_DIAMOND})
SPEC_CONVENTIONS = ("raw_union", "raw_sum", "isomorphism_classes")
CASE_FILTERS = {"diamond": DIAMOND_VARIANT, "co-claw": CO_CLAW_VARIANT}


@dataclass
class CaseCheckReport:
    variants: list[str]
    per_case: list[dict] = field(default_factory=list)
    raw_per_variant: dict[str, int] = field(default_factory=dict)
    raw_union: int = 0
    raw_sum: int = 0
    isomorphism_classes: int = 0
    claw_codiamond_configurations: int = 0
    claw_codiamond_all_e_positive: bool = True
    all_e_positive: bool = True
    non_e_positive: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def conventions(self) -> dict[str, int]:
        return {"raw_union": self.raw_union, "raw_sum": self.raw_sum,
                "isomorphism_classes": self.isomorphism_classes,
                "claw_codiamond_configurations": self.claw_codiamond_configurations}

    @property
    def matches_36(self) -> list[str]:
        return [name for name, count in self.conventions.items() if count == 36]

    def to_json(self) -> dict:
        return {
            "schema": "csf-casecheck/1",
            "variants": self.variants,
            "per_case": self.per_case,
            "raw_per_variant": self.raw_per_variant,
            "counts": self.conventions,
            "conventions_equal_to_36": self.matches_36,
            "all_e_positive": self.all_e_positive,
            "claw_codiamond_all_e_positive": self.claw_codiamond_all_e_positive,
            "non_e_positive": self.non_e_positive,
        }


def run_case_check(variants: Iterable[str] = ("diamond", "co-claw")) -> CaseCheckReport:
    """Generate every base case, keep survivors of the chosen filters that
    contain a triangle, and check each survivor's e-positivity.

    Counts are reported under four conventions: raw (base case, edge subset)
    configurations surviving at least one filter, raw survivors summed over
    the filters, isomorphism classes among the survivors, and the
    configurations that are merely (claw, co-diamond)-free with a triangle
    (ovals already stable, no diamond/co-claw filter applied).
    """
    start = time.perf_counter()
    variants = list(variants)
    report = CaseCheckReport(variants)
    classes: dict[tuple[int, int], bool] = {}
    loose: dict[tuple[int, int], bool] = {}
    for sizes, possible in BASE_CASES.items():
        passed: dict[tuple, set[str]] = {}
        for name in variants:
            for cg in generate_peculiar_cases(CaseSpec(sizes, CASE_FILTERS[name])):
                passed.setdefault(cg.inter_edges, set()).add(name)
                report.raw_per_variant[name] = report.raw_per_variant.get(name, 0) + 1
                report.raw_sum += 1
        graphs = []
        for edges in sorted(passed):
            g = _case_graph(sizes, edges)
            key = canonical_key(g)
            if key not in classes:
                ok, _ = is_positive(csf(g, schur=False).e_expansion)
                classes[key] = ok
                if not ok:
                    report.non_e_positive.append(encode(g))
            graphs.append(encode(g))
        report.raw_union += len(passed)
        for cg in generate_peculiar_cases(CaseSpec(sizes, CLAW_CODIAMOND)):
            report.claw_codiamond_configurations += 1
            key = canonical_key(cg.graph)
            if key not in classes and key not in loose:
                loose[key], _ = is_positive(csf(cg.graph, schur=False).e_expansion)
        report.per_case.append({"oval_sizes": list(sizes), "possible_edges": possible,
                                "survivors": len(passed), "graphs": graphs})
    report.isomorphism_classes = len(classes)
    report.all_e_positive = all(classes.values())
    report.claw_codiamond_all_e_positive = report.all_e_positive and all(loose.values())
    report.elapsed = time.perf_counter() - start
    return report


def _case_graph(sizes, inter_edges) -> Graph:
    n, base, _, _ = _case_layout(sizes)
    rows = [0] * n
    for u, v in list(base) + list(inter_edges):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


# -- generalized pyramids -----------------------------------------------------------

PYRAMID_LIMIT = 14


@dataclass
class PyramidRow:
    p: int
    q: int
    r: int
    n: int
    e_positive: bool
    s_positive: bool
    e_witness: tuple | None = None


def pyramid_triples(max_total: int) -> list[tuple[int, int, int]]:
    out = []
    for total in range(2, max_total - 2):
        for p in range(total, 0, -1):
            for q in range(min(p, total - p), 0, -1):
                r = total - p - q
                if 0 <= r <= q:
                    out.append((p, q, r))
    return out


def pyramid_sweep(max_total: int) -> list[PyramidRow]:
    """Positivity verdicts for ``generalized_pyramid(p, q, r)`` with
    ``p >= q >= r``, ``q >= 1`` and ``p + q + r + 3 <= max_total``."""
    if max_total > PYRAMID_LIMIT:
        raise ValueError(f"pyramid sweep budget limited to {PYRAMID_LIMIT} vertices")
    rows = []
    for p, q, r in pyramid_triples(max_total):
        res = csf(generalized_pyramid(p, q, r))
        e_ok, witness = is_positive(res.e_expansion)
        s_ok, _ = is_positive(res.s_expansion)
        rows.append(PyramidRow(p, q, r, p + q + r + 3, e_ok, s_ok, witness))
    return rows


# -- oval bound for the K4 case ------------------------------------------------------

@dataclass
class BoundReport:
    counts: dict[int, int]
    witnesses_5: list[str]
    max_oval: int
    vertex_bound: int

    def to_json(self) -> dict:
        return {"schema": "csf-bound/1", "counts": {str(k): v for k, v in self.counts.items()},
                "witnesses_5": self.witnesses_5, "max_oval": self.max_oval,
                "vertex_bound": self.vertex_bound}


def k4_oval_bound_check(max_n: int = 6) -> BoundReport:
    """Count graphs with neither a triangle nor a stable set of size three.

    None exist on six vertices, so an oval of a peculiar (claw, co-diamond,
    K4)-free graph has at most five vertices and the graph at most 18.
    """
    counts = {}
    witnesses = []
    for n in range(1, max_n + 1):
        hits = [g for g in enumerate_graphs(n)
                if find_triangle(g) is None and independence_number(g) <= 2]
        counts[n] = len(hits)
        if n == 5:
            witnesses = [encode(g) for g in hits]
    max_oval = max(n for n, c in counts.items() if c)
    return BoundReport(counts, witnesses, max_oval, 3 * max_oval + 3)
