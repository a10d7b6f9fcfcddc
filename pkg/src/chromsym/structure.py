"""Structural recognizers: stability number, complete multipartite graphs,
(claw, triangle)-free shapes and the peculiar co-triangle decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .fourvertex import FourVertexKind, find_induced
from .graph import Graph, bits, complement, component_masks, components, find_triangle, is_clique


class PreconditionError(ValueError):
    """The input graph violates an operation's structural precondition."""

    def __init__(self, message: str, witness=None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


def _clique_cover_size(adj, cand: int) -> int:
    # greedy partition into cliques; every stable set meets each clique once
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique = low
        ext = cand & adj[v]
        while ext:
            u = ext & -ext
            clique |= u
            ext &= adj[u.bit_length() - 1]
        cand &= ~clique
        count += 1
    return count


def maximum_stable_set(g: Graph) -> frozenset[int]:
    """A maximum stable set, found by branch and bound over bitsets."""
    adj = g.adj
    best_size = 0
    best_set = 0

    def expand(cand: int, size: int, chosen: int):
        nonlocal best_size, best_set
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_size(adj, cand) <= best_size:
            return
        # branch on a maximum-degree candidate: excluding it shrinks the most
        v = max(bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        expand(cand & ~adj[v] & ~(1 << v), size + 1, chosen | 1 << v)
        expand(cand & ~(1 << v), size, chosen)

    expand(g.vertex_mask, 0, 0)
    return frozenset(bits(best_set))


def independence_number(g: Graph) -> int:
    return len(maximum_stable_set(g))


def is_complete_multipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """``(True, part sizes descending)`` iff the complement is a union of cliques."""
    co = complement(g)
    masks = component_masks(co)
    if all(is_clique(co, m) for m in masks):
        return True, sorted((m.bit_count() for m in masks), reverse=True)
    return False, None


class ComponentShape(NamedTuple):
    kind: str  # "path" or "cycle"
    size: int


def claw_triangle_free_shape(g: Graph) -> list[ComponentShape]:
    """Identify each component of a (claw, triangle)-free graph as P_k or C_k."""
    tri = find_triangle(g)
    if tri is not None:
        raise PreconditionError("graph contains a triangle", tri)
    claw = find_induced(g, [FourVertexKind.CLAW])
    if claw is not None:
        raise PreconditionError("graph contains a claw", claw)
    shapes = []
    for comp in components(g):
        verts = sorted(comp)
        mask = sum(1 << v for v in verts)
        degs = [(g.adj[v] & mask).bit_count() for v in verts]
        edges = sum(degs) // 2
        if len(verts) >= 3 and edges == len(verts) and all(d == 2 for d in degs):
            shapes.append(ComponentShape("cycle", len(verts)))
        elif edges == len(verts) - 1 and max(degs) <= 2:
            shapes.append(ComponentShape("path", len(verts)))
        else:  # pragma: no cover - excluded by the claw/triangle checks above
            raise AssertionError(f"component {verts} is neither a path nor a cycle")
    return shapes


@dataclass(frozen=True)
class PeculiarDecomposition:
    """Co-triangle ``(a, b, c)`` and the three ovals ``S_ab``, ``S_ac``, ``S_bc``."""

    co_triangle: tuple[int, int, int]
    oval_ab: tuple[int, ...]
    oval_ac: tuple[int, ...]
    oval_bc: tuple[int, ...]

    @property
    def ovals(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return self.oval_ab, self.oval_ac, self.oval_bc

    @property
    def oval_sizes(self) -> tuple[int, int, int]:
        return tuple(len(o) for o in self.ovals)

    def validate(self, g: Graph) -> None:
        a, b, c = self.co_triangle
        tri_mask = (1 << a) | (1 << b) | (1 << c)
        if any(g.adj[x] & tri_mask for x in self.co_triangle):
            raise AssertionError("co-triangle is not stable")
        covered = set(self.co_triangle)
        for (x, y), oval in zip(((a, b), (a, c), (b, c)), self.ovals):
            for v in oval:
                if g.adj[v] & tri_mask != (1 << x) | (1 << y):
                    raise AssertionError(f"vertex {v} does not see exactly {x} and {y}")
            covered.update(oval)
        if covered != set(range(g.n)) or sum(self.oval_sizes) + 3 != g.n:
            raise AssertionError("ovals do not partition the remaining vertices")
        if sum(1 for s in self.oval_sizes if s) < 2:
            raise AssertionError("fewer than two non-empty ovals")


def is_peculiar(g: Graph) -> bool:
    try:
        _check_peculiar(g)
    except PreconditionError:
        return False
    return True


def _check_peculiar(g: Graph) -> None:
    if g.n == 0 or len(components(g)) != 1:
        raise PreconditionError("graph is not connected")
    bad = find_induced(g, [FourVertexKind.CLAW, FourVertexKind.CO_DIAMOND])
    if bad is not None:
        kind = "claw" if find_induced(g.induced(bad), [FourVertexKind.CLAW]) else "co-diamond"
        raise PreconditionError(f"graph contains a {kind}", bad)
    alpha = independence_number(g)
    if alpha != 3:
        raise PreconditionError(f"stability number is {alpha}, not 3")
    if find_triangle(g) is None:
        raise PreconditionError("graph has no triangle")


def decompose_peculiar(g: Graph) -> PeculiarDecomposition:
    """Split a peculiar graph around its lexicographically least co-triangle."""
    _check_peculiar(g)
    adj = g.adj
    a, b, c = next(t for t in combinations(range(g.n), 3)
                   if not (adj[t[0]] >> t[1] & 1 or adj[t[0]] >> t[2] & 1 or adj[t[1]] >> t[2] & 1))
    ovals: dict[int, list[int]] = {(1 << a) | (1 << b): [], (1 << a) | (1 << c): [], (1 << b) | (1 << c): []}
    tri_mask = (1 << a) | (1 << b) | (1 << c)
    for v in range(g.n):
        if v in (a, b, c):
            continue
        seen = adj[v] & tri_mask
        if seen not in ovals:  # pragma: no cover - ruled out by the freeness checks
            raise AssertionError(f"vertex {v} sees {bits(seen)} of the co-triangle")
        ovals[seen].append(v)
    ab, ac, bc = (tuple(ovals[k]) for k in ovals)
    dec = PeculiarDecomposition((a, b, c), ab, ac, bc)
    dec.validate(g)
    return dec
