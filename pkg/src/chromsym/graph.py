"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex ids, loops, size)."""


class Graph:
    """Immutable simple graph. ``adj[v]`` is the neighbour bitset of ``v``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits above vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                rest ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return Graph._trusted, (self.n, self.adj)

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # skips validation; callers guarantee symmetric, loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "_hash", None)
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph._trusted(len(vertices), rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph._trusted(self.n, rows)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        if shift + other.n > MAX_VERTICES:
            raise GraphError("union exceeds the vertex limit")
        return Graph._trusted(shift + other.n, list(self.adj) + [row << shift for row in other.adj])

    def is_connected(self) -> bool:
        return len(components(self)) <= 1


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted(g.n, [(~row & full) & ~(1 << v) for v, row in enumerate(g.adj)])


def components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def component_masks(g: Graph) -> list[int]:
    return [sum(1 << v for v in comp) for comp in components(g)]


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | (1 << v)) & mask == mask for v in bits(mask))


def is_stable(g: Graph, mask: int) -> bool:
    return all(not g.adj[v] & mask for v in bits(mask))


def has_triangle(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return True
    return False


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v] & ~((1 << (v + 1)) - 1)
        if common:
            return u, v, (common & -common).bit_length() - 1
    return None


# -- standard families -------------------------------------------------------

def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1")
    return from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    full = (1 << k) - 1
    return Graph._trusted(k, [full & ~(1 << v) for v in range(k)])


def empty(k: int) -> Graph:
    if k < 1:
        raise GraphError("empty graph needs k >= 1")
    return Graph._trusted(k, [0] * k)


def three_sun() -> Graph:
    """Triangle 1-2-4 with pendant vertices 0 (on 1), 3 (on 2) and 5 (on 4)."""
    return from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 4), (4, 5)])


def generalized_pyramid(p: int, q: int, r: int) -> Graph:
    """Co-triangle ``a=0, b=1, c=2`` plus clique ovals S_ab, S_ac, S_bc of sizes p, q, r.

    Every oval vertex sees its two co-triangle vertices and every vertex of the
    other ovals.
    """
    sizes = (p, q, r)
    if min(sizes) < 0 or sum(1 for s in sizes if s > 0) < 2:
        raise GraphError("generalized pyramid needs p, q, r >= 0 with at least two positive")
    attach = ((0, 1), (0, 2), (1, 2))
    n = 3 + p + q + r
    edges = []
    start = 3
    for (x, y), size in zip(attach, sizes):
        for v in range(start, start + size):
            edges += [(x, v), (y, v)]
        start += size
    edges += [(u, v) for u in range(3, n) for v in range(u + 1, n)]
    return from_edges(n, edges)


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based)."""
    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    lines = [(i, toks) for i, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise GraphError("line 1: missing header 'n m'")
    lineno, header = lines[0]
    try:
        n, m = (int(t) for t in header)
    except ValueError:
        raise GraphError(f"line {lineno}: header must be two integers 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphError(f"line {lineno}: header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, toks in lines[1:]:
        try:
            u, v = (int(t) for t in toks)
        except ValueError:
            raise GraphError(f"line {lineno}: expected two vertex ids") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphError(f"line {lineno}: invalid edge ({u}, {v}) for n={n}")
        edges.append((u, v))
    return from_edges(n, edges)


def parse_edge_lists(text: str) -> list[Graph]:
    """Parse consecutive edge-list records (each a header plus its edges)."""
    lines = [(i + 1, line) for i, line in enumerate(text.splitlines())]
    lines = [(i, line) for i, line in lines if line.split() and not line.split()[0].startswith("#")]
    graphs = []
    pos = 0
    while pos < len(lines):
        lineno, header = lines[pos]
        toks = header.split()
        try:
            m = int(toks[1]) if len(toks) == 2 else None
        except ValueError:
            m = None
        if m is None or m < 0:
            raise GraphError(f"line {lineno}: header must be two integers 'n m'")
        block = lines[pos:pos + m + 1]
        if len(block) < m + 1:
            raise GraphError(f"line {lineno}: header promises {m} edges, found {len(block) - 1}")
        # keep original line numbers by padding with blank lines
        text_block = "\n" * (lineno - 1) + "\n".join(line for _, line in block)
        graphs.append(parse_edge_list(text_block))
        pos += m + 1
    return graphs


def format_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"
