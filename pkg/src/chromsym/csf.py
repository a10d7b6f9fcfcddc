"""Chromatic symmetric functions by three independent routes.

* stable partitions: group proper colourings by their colour classes;
* edge subsets: the signed power-sum expansion over spanning subgraphs;
* deletion-contraction on vertex-weighted graphs, memoized on canonical forms.
"""

from __future__ import annotations

import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Sequence

from . import graph6
from .canonical import canonical_form
from .graph import Graph, bits
from .symfun import (
    Partition,
    SymPoly,
    expand_in_e,
    expand_in_s,
    multiplicity_factorial,
    p_to_m,
)

STABLE_LIMIT = 14
DC_LIMIT = 14
EDGE_SUBSET_LIMIT = 28


class CsfLimitError(ValueError):
    pass


class CrossCheckError(AssertionError):
    pass


def _insert(key: Partition, part: int) -> Partition:
    for i, p in enumerate(key):
        if part >= p:
            return key[:i] + (part,) + key[i:]
    return key + (part,)


def csf_stable_partitions(g: Graph) -> SymPoly:
    """X_G in the monomial basis from the partitions of V into stable sets.

    A partition of type ``μ`` contributes ``∏ r_i! · m_μ``: that many
    colourings use a fixed set of ``ℓ(μ)`` colours on its blocks.
    """
    n = g.n
    if n > STABLE_LIMIT:
        raise CsfLimitError(f"stable-partition route limited to {STABLE_LIMIT} vertices")
    adj = g.adj
    memo: dict[int, dict[Partition, int]] = {0: {(): 1}}

    def stable_blocks(v: int, rem: int):
        # stable sets containing v inside rem
        out = []

        def grow(block, cand):
            if not cand:
                out.append(block)
                return
            low = cand & -cand
            u = low.bit_length() - 1
            grow(block | low, cand & ~adj[u] & ~low)
            grow(block, cand & ~low)

        grow(1 << v, rem & ~adj[v] & ~(1 << v))
        return out

    def types(rem: int) -> dict[Partition, int]:
        hit = memo.get(rem)
        if hit is not None:
            return hit
        v = (rem & -rem).bit_length() - 1
        out: dict[Partition, int] = {}
        for block in stable_blocks(v, rem):
            size = block.bit_count()
            for key, c in types(rem & ~block).items():
                nk = _insert(key, size)
                out[nk] = out.get(nk, 0) + c
        memo[rem] = out
        return out

    counts = types(g.vertex_mask)
    return SymPoly("m", {mu: c * multiplicity_factorial(mu) for mu, c in counts.items()}, n)


def csf_edge_subsets(g: Graph) -> SymPoly:
    """``Σ_{S⊆E} (-1)^{|S|} p_{λ(S)}`` with ``λ(S)`` the component sizes of ``(V, S)``.

    Subsets are folded in edge by edge; subsets reaching the same vertex
    partition share one signed tally, which keeps the sum exact while avoiding
    ``2^|E|`` separate union-find runs.
    """
    n, m = g.n, g.m
    if m > EDGE_SUBSET_LIMIT:
        raise CsfLimitError(f"edge-subset route limited to {EDGE_SUBSET_LIMIT} edges, got {m}")
    states: dict[tuple[int, ...], int] = {tuple(range(n)): 1}
    for u, v in g.edges():
        nxt: dict[tuple[int, ...], int] = {}
        for labels, w in states.items():
            nxt[labels] = nxt.get(labels, 0) + w
            a, b = labels[u], labels[v]
            if a == b:
                merged = labels
            else:
                lo, hi = min(a, b), max(a, b)
                merged = tuple(lo if x == hi else x for x in labels)
            nxt[merged] = nxt.get(merged, 0) - w
        states = {k: w for k, w in nxt.items() if w}
    out: dict[Partition, int] = {}
    for labels, w in states.items():
        sizes: dict[int, int] = {}
        for x in labels:
            sizes[x] = sizes.get(x, 0) + 1
        lam = tuple(sorted(sizes.values(), reverse=True))
        out[lam] = out.get(lam, 0) + w
    return SymPoly("p", out, n)


def _p_to_m(f: SymPoly) -> SymPoly:
    out = SymPoly("m", {}, f.degree)
    for lam, c in f.coeffs.items():
        out = out + p_to_m(lam).scale(c)
    return out


class DeletionContraction:
    """``X_{G,w} = X_{G-e,w} - X_{G/e,w'}`` on vertex-weighted graphs.

    Contracting ``uv`` merges the endpoints into one vertex of weight
    ``w(u) + w(v)`` (parallel edges collapse); an edgeless weighted graph has
    ``X = p_{sorted weights}``.  Ordinary graphs carry weight 1 everywhere.
    Results are memoized in power-sum form under the canonical graph6 string
    plus canonical weight sequence, with LRU eviction beyond ``cache_size``.
    """

    def __init__(self, cache_size: int = 200_000):
        self.cache_size = cache_size
        self._memo: OrderedDict[tuple[str, tuple[int, ...]], dict[Partition, int]] = OrderedDict()
        self.hits = 0
        self.misses = 0

    def __call__(self, g: Graph) -> SymPoly:
        if g.n > DC_LIMIT:
            raise CsfLimitError(f"deletion-contraction limited to {DC_LIMIT} vertices")
        p = self.power_sum(g, [1] * g.n)
        return _p_to_m(SymPoly("p", p, g.n))

    def power_sum(self, g: Graph, weights: Sequence[int]) -> dict[Partition, int]:
        if g.m == 0:
            return {tuple(sorted(weights, reverse=True)): 1}
        canon, perm = canonical_form(g, weights)
        w = [0] * g.n
        for v, i in enumerate(perm):
            w[i] = weights[v]
        key = (graph6.encode(canon), tuple(w))
        hit = self._memo.get(key)
        if hit is not None:
            self.hits += 1
            self._memo.move_to_end(key)
            return hit
        self.misses += 1
        u, v = next(canon.edges())
        adj = list(canon.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        deleted = Graph._trusted(canon.n, adj)
        contracted, cw = _contract(canon, w, u, v)
        out = dict(self.power_sum(deleted, w))
        for lam, c in self.power_sum(contracted, cw).items():
            val = out.get(lam, 0) - c
            if val:
                out[lam] = val
            else:
                out.pop(lam, None)
        self._memo[key] = out
        if len(self._memo) > self.cache_size:
            self._memo.popitem(last=False)
        return out

    def clear(self):
        self._memo.clear()


def _contract(g: Graph, weights: Sequence[int], u: int, v: int) -> tuple[Graph, list[int]]:
    """Merge ``v`` into ``u`` (``u < v``), dropping loops and parallel edges."""
    keep = [x for x in range(g.n) if x != v]
    index = {x: i for i, x in enumerate(keep)}
    rows = []
    for x in keep:
        row = g.adj[x]
        if x == u:
            row |= g.adj[v]
            row &= ~((1 << u) | (1 << v))
        elif row >> v & 1:
            row = (row & ~(1 << v)) | (1 << u)
        new = 0
        for y in bits(row):
            new |= 1 << index[y]
        rows.append(new)
    cw = [weights[x] for x in keep]
    cw[index[u]] += weights[v]
    return Graph._trusted(len(keep), rows), cw


_default_dc = DeletionContraction()


def csf_deletion_contraction(g: Graph, engine: DeletionContraction | None = None) -> SymPoly:
    return (engine or _default_dc)(g)


# -- front door ------------------------------------------------------------------

ALGORITHMS = ("stable", "edges", "dc")


@dataclass
class CsfResult:
    m_expansion: SymPoly
    e_expansion: SymPoly
    s_expansion: SymPoly
    algorithm: str
    elapsed: float
    timings: dict[str, float] = field(default_factory=dict)


def choose_algorithm(g: Graph, dense_fraction: float | None = None) -> str:
    """Stable partitions unless a density threshold is set and exceeded."""
    if dense_fraction is not None and g.n > 1 and g.m > dense_fraction * g.n * (g.n - 1) / 2:
        return "dc"
    return "stable"


def csf_m(g: Graph, algorithm: str = "stable") -> SymPoly:
    if algorithm == "stable":
        return csf_stable_partitions(g)
    if algorithm == "edges":
        return _p_to_m(csf_edge_subsets(g))
    if algorithm == "dc":
        return csf_deletion_contraction(g)
    raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")


def csf(g: Graph, algorithm: str | None = None, cross_check: bool = False,
        schur: bool = True, dense_fraction: float | None = None) -> CsfResult:
    """Compute X_G and its elementary and Schur expansions.

    With ``cross_check`` the monomial expansion is recomputed by a second
    route and any disagreement raises :class:`CrossCheckError`.
    """
    start = time.perf_counter()
    algo = algorithm or choose_algorithm(g, dense_fraction)
    xm = csf_m(g, algo)
    timings = {"csf": time.perf_counter() - start}
    if cross_check:
        t = time.perf_counter()
        other = "dc" if algo != "dc" else "stable"
        if csf_m(g, other) != xm:
            raise CrossCheckError(f"{algo} and {other} disagree on {graph6.encode(g)}")
        timings["cross_check"] = time.perf_counter() - t
    t = time.perf_counter()
    xe = expand_in_e(xm)
    timings["e_expansion"] = time.perf_counter() - t
    t = time.perf_counter()
    xs = expand_in_s(xm) if schur else SymPoly("s", {}, g.n)
    timings["s_expansion"] = time.perf_counter() - t
    return CsfResult(xm, xe, xs, algo, time.perf_counter() - start, timings)


# -- independent integer oracle ---------------------------------------------------

def chromatic_polynomial(g: Graph) -> list[int]:
    """Coefficients ``c[i]`` of ``k^i`` in the chromatic polynomial.

    Plain integer deletion-contraction memoized on labelled adjacency; shares
    nothing with the symmetric-function code.
    """
    memo: dict[tuple[int, ...], list[int]] = {}

    def rec(adj: tuple[int, ...]) -> list[int]:
        hit = memo.get(adj)
        if hit is not None:
            return hit
        n = len(adj)
        u = next((x for x in range(n) if adj[x]), None)
        if u is None:
            out = [0] * n + [1]
        else:
            v = (adj[u] & -adj[u]).bit_length() - 1
            dele = list(adj)
            dele[u] &= ~(1 << v)
            dele[v] &= ~(1 << u)
            merged, _ = _contract(Graph._trusted(n, adj), [1] * n, u, v)
            a = rec(tuple(dele))
            b = rec(merged.adj)
            out = [x - (b[i] if i < len(b) else 0) for i, x in enumerate(a)]
        memo[adj] = out
        return out

    return rec(g.adj)


def chromatic_value(g: Graph, k: int) -> int:
    return sum(c * k ** i for i, c in enumerate(chromatic_polynomial(g)))
