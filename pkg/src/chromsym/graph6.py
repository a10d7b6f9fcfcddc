"""graph6 encoding for graphs with fewer than 63 vertices."""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, GraphError

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def encode(g: Graph) -> str:
    n = g.n
    if n >= 63:
        raise Graph6Error(f"graph6 writer supports n < 63, got {n}")
    out = [chr(n + 63)]
    acc = 0
    count = 0
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def decode(line: str | bytes, offset: int = 0) -> Graph:
    """Decode one graph6 line; ``offset`` only shifts byte positions in errors."""
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.rstrip("\r\n")
    if line.startswith(HEADER.decode()):
        line = line[len(HEADER):]
        offset += len(HEADER)
    if not line:
        raise Graph6Error(f"byte {offset}: empty graph6 record")
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {offset + i}: illegal graph6 character {ch!r}")
    n = ord(line[0]) - 63
    if n == 63:
        raise Graph6Error(f"byte {offset}: graphs with n >= 63 are not supported")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    if len(line) - 1 != need:
        raise Graph6Error(f"byte {offset + 1}: expected {need} data bytes for n={n}, got {len(line) - 1}")
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(line[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    if pairs % 6:
        tail = ord(line[-1]) - 63
        if tail & ((1 << (6 - pairs % 6)) - 1):
            raise Graph6Error(f"byte {offset + len(line) - 1}: non-zero padding bits")
    return Graph._trusted(n, rows)


def read_graph6(data: str | bytes) -> list[Graph]:
    """Parse newline-delimited graph6 records, optional header on the first."""
    if isinstance(data, bytes):
        data = data.decode("ascii", errors="replace")
    graphs = []
    offset = 0
    for line in data.splitlines(keepends=True):
        body = line.rstrip("\r\n")
        if body:
            graphs.append(decode(body, offset))
        offset += len(line)
    return graphs


def write_graph6(graphs: Iterable[Graph], header: bool = False) -> bytes:
    lines = [encode(g) for g in graphs]
    if header and lines:
        lines[0] = HEADER.decode() + lines[0]
    return "".join(line + "\n" for line in lines).encode("ascii")
