"""Canonical labeling by equitable-partition refinement and individualization.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualize each vertex of the first non-singleton cell in
turn, recurse.  Leaves are compared by their upper-triangle adjacency
encoding and the least one wins.  Automorphisms found on the way (two leaves
with equal encodings) prune sibling branches in the same orbit.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Graph, bits

CANON_LIMIT = 16


class CanonLimitError(ValueError):
    pass


def _refine(adj: Sequence[int], cells: list[list[int]], splitters=None) -> list[list[int]]:
    """Split cells by neighbour counts into splitter cells until equitable.

    Sub-cells are ordered by count and the splitter queue is FIFO, so the
    result depends only on the labelled structure, never on vertex ids.
    """
    n = len(adj)
    if splitters is None:
        splitters = [sum(1 << v for v in cell) for cell in cells]
    queue = deque(splitters)
    while queue and len(cells) < n:
        w = queue.popleft()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for k in sorted(groups):
                part = groups[k]
                out.append(part)
                queue.append(sum(1 << v for v in part))
        cells = out
    return cells


def _homogeneous(adj: Sequence[int], cells: list[list[int]]) -> bool:
    """True when every permutation inside cells is an automorphism."""
    masks = [sum(1 << v for v in cell) for cell in cells]
    for cell, cmask in zip(cells, masks):
        if len(cell) == 1:
            continue
        for other in masks:
            full = None
            for v in cell:
                # a vertex of the cell always "sees" itself inside its own cell
                seen = (adj[v] & other) | (1 << v if other == cmask else 0)
                if full is None:
                    if seen == other:
                        full = True
                    elif seen == (1 << v if other == cmask else 0):
                        full = False
                    else:
                        return False
                elif seen != (other if full else (1 << v if other == cmask else 0)):
                    return False
    return True


def _encode(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i, v in enumerate(order):
        row = 0
        for u in bits(adj[v]):
            j = pos[u]
            if j > i:
                row |= 1 << (n - 1 - j)
        code = (code << (n - 1 - i)) | row
    return code


def _orbit_rep(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def canonical_form(g: Graph, colors: Sequence | None = None) -> tuple[Graph, list[int]]:
    """Return ``(canon, perm)`` with ``canon == g.relabel(perm)``.

    ``colors`` optionally gives each vertex a sortable colour that must be
    preserved; isomorphic coloured graphs get identical canonical forms.
    """
    code, order = _search(g, colors)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm), perm


def canonical_key(g: Graph, colors: Sequence | None = None) -> tuple[int, int]:
    """Hashable certificate: equal iff the (coloured) graphs are isomorphic
    given the same colour multiset."""
    code, _ = _search(g, colors)
    return g.n, code


def automorphism_generators(g: Graph, colors: Sequence | None = None) -> list[list[int]]:
    """Automorphisms of ``g`` met during the canonical search.

    They need not generate the whole group; callers only use them for
    pruning, where any subgroup is safe.
    """
    autos: list[list[int]] = []
    _search(g, colors, autos)
    return autos


def _search(g: Graph, colors, autos: list | None = None) -> tuple[int, list[int]]:
    n = g.n
    if n > CANON_LIMIT:
        raise CanonLimitError(f"canonical labeling limited to {CANON_LIMIT} vertices, got {n}")
    if n == 0:
        return 0, []
    adj = g.adj
    if colors is None:
        cells = [list(range(n))]
    else:
        by_color: dict = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    cells = _refine(adj, cells)

    best_code = None
    best_order: list[int] = []
    found = autos if autos is not None else []

    def leaf(order):
        nonlocal best_code, best_order
        code = _encode(adj, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
        elif code == best_code:
            # order -> best_order maps vertex order[i] to best_order[i]
            gamma = [0] * n
            for a, b in zip(order, best_order):
                gamma[a] = b
            found.append(gamma)

    def visit(cells, fixed):
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        if _homogeneous(adj, cells):
            leaf([v for c in cells for v in c])
            # every permutation inside a cell is an automorphism
            for c in cells:
                for a, b in zip(c, c[1:]):
                    gamma = list(range(n))
                    gamma[a], gamma[b] = b, a
                    found.append(gamma)
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if tried and found:
                parent = list(range(n))
                for gamma in found:
                    if all(gamma[f] == f for f in fixed):
                        for a in range(n):
                            ra, rb = _orbit_rep(parent, a), _orbit_rep(parent, gamma[a])
                            if ra != rb:
                                parent[ra] = rb
                rv = _orbit_rep(parent, v)
                if any(_orbit_rep(parent, t) == rv for t in tried):
                    continue
            tried.append(v)
            split = cells[:idx] + [[v], [u for u in target if u != v]] + cells[idx + 1:]
            visit(_refine(adj, split, [1 << v]), fixed + [v])

    visit(cells, [])
    return best_code, best_order
