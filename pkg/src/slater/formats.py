"""Graph text formats: graph6 and plain ``n m`` edge lists."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, InputError

GRAPH6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise InputError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        groups, start = data[2:8], 2
    else:
        groups, start = data[1:4], 1
    n = 0
    for c in groups:
        n = (n << 6) | (c - 63)
    return n, start + len(groups)


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` in graph6 (upper triangle, column-major, 6-bit groups)."""
    out = []
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    text = _encode_order(g.n) + "".join(out)
    return GRAPH6_HEADER + text if header else text


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    if data.startswith(b":") or data.startswith(b";"):
        raise InputError("sparse6/digraph6 input is not supported")
    if any(c < 63 or c > 126 for c in data):
        raise InputError("invalid character in graph6 string")
    n, pos = _decode_order(data)
    if n > MAX_ORDER:
        raise InputError(f"order {n} exceeds {MAX_ORDER}")
    body = data[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise InputError(f"graph6 body has {len(body)} bytes, expected {need}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise InputError("edge list needs an 'n m' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"non-integer token in edge list: {exc}") from None
    n, m = nums[0], nums[1]
    if len(nums) != 2 + 2 * m:
        raise InputError(f"edge list declares {m} edges but has {(len(nums) - 2) / 2}")
    edges = list(zip(nums[2::2], nums[3::2]))
    g = Graph.from_edges(n, edges)
    if g.m != m:
        raise InputError("edge list contains duplicate edges")
    return g


def read_graph(text: str) -> Graph:
    """Parse a graph given either as graph6 or as an edge list."""
    stripped = text.strip()
    first = stripped.split("\n", 1)[0].strip()
    if len(first.split()) == 2 and all(t.lstrip("-").isdigit() for t in first.split()):
        return from_edge_list(stripped)
    return from_graph6(first)
