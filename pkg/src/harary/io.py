"""graph6 (short form) and plain edge-list formats."""

from __future__ import annotations

from pathlib import Path

from .errors import Graph6Error, GraphError
from .graph import Graph, from_edge_list

G6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    """Short-form graph6: header byte ``n + 63`` then column-major upper-triangle bits."""
    if not 1 <= g.n <= 62:
        raise Graph6Error(f"graph6 short form supports 1..62 vertices, got {g.n}")
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not 1 <= n <= 62:
        # 126 would introduce the long form, which is not supported
        raise Graph6Error(f"malformed graph6 header byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    payload = s[1:]
    if len(payload) != nbytes:
        raise Graph6Error(f"graph6 payload has {len(payload)} bytes, expected {nbytes} for n={n}")
    bits = []
    for ch in payload:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"invalid graph6 byte {ch!r}")
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits in graph6 payload")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n, m = (int(x) for x in lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise GraphError("edge list must contain integer pairs") from exc
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_graph(text: str) -> Graph:
    """Auto-detect: a leading digit or ``#`` means edge list, anything else graph6."""
    head = text.lstrip()
    if not head:
        raise GraphError("empty input")
    if head[0].isdigit() or head[0] == "#":
        return parse_edge_list(text)
    first = head.splitlines()[0]
    return decode_graph6(first)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())
