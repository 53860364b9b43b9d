"""graph6 codec and DOT export.

graph6 stores the order ``N(n)`` followed by the upper triangle of the
adjacency matrix, column by column (``x(0,1) x(0,2) x(1,2) x(0,3) ...``),
packed six bits per byte, each byte offset by 63.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

__all__ = ["encode_graph6", "decode_graph6", "to_dot"]

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    adj = [set(row) for row in g.adjacency]
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    offset = 0
    s = text.rstrip("\r\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        offset = len(_HEADER)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", offset + i)
    if not s:
        raise Graph6Error("empty graph6 string", offset)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated order field", offset + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated order field", offset + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1", offset)
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", offset + pos + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    total = n * (n - 1) // 2
    if total % 6 and body[-1] & ((1 << (6 - total % 6)) - 1):
        raise Graph6Error("non-zero padding bits", offset + pos + need - 1)
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G", highlight=()) -> str:
    """Undirected DOT text; ``highlight`` vertices are drawn as boxes."""
    lines = [f"graph {name} {{"]
    marked = set(highlight)
    for v in range(g.n):
        lines.append(f"  {v}{' [shape=box]' if v in marked else ''};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
