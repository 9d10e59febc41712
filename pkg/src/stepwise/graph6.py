"""graph6 interchange: bit-exact encoder and decoder.

The format packs the upper triangle of the adjacency matrix in column order
(for column j, bits x(0,j)..x(j-1,j)) into 6-bit chunks offset by 63, after a
vertex-count header. Encoding is canonical-minimal: the shortest header form
for the order is always used, and decoding rejects overlong headers, stray
padding bits and bodies of the wrong length, reporting the byte position.
"""

from __future__ import annotations

from .graph import Graph, _graph_from_adj

_HEADER_PREFIX = b">>graph6<<"
_MAX_N = 68719476735  # 36-bit header limit


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the offending byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


def graph6_encode(g: Graph) -> bytes:
    """Encode a vertex-labeled graph as graph6 bytes (no trailing newline)."""
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out.extend(((n >> 12) & 63) + 63 for _ in (0,))
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    elif n <= _MAX_N:
        out.extend((126, 126))
        for shift in (30, 24, 18, 12, 6, 0):
            out.append(((n >> shift) & 63) + 63)
    else:
        raise ValueError(f"graph6 cannot encode n={n} (limit {_MAX_N})")
    adj = g.adj
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _group(data: bytes, pos: int) -> int:
    if pos >= len(data):
        raise Graph6Error("truncated graph6 input", pos)
    b = data[pos]
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte 0x{b:02x} outside graph6 alphabet", pos)
    return b - 63


def _decode_order(data: bytes) -> tuple[int, int]:
    """Parse the vertex-count header; return (n, body offset)."""
    first = _group(data, 0)
    if first <= 62:
        return first, 1
    if _group(data, 1) <= 62:
        n = (_group(data, 1) << 12) | (_group(data, 2) << 6) | _group(data, 3)
        if n <= 62:
            raise Graph6Error(f"overlong header for n={n}", 0)
        return n, 4
    n = 0
    for pos in range(2, 8):
        n = (n << 6) | _group(data, pos)
    if n <= 258047:
        raise Graph6Error(f"overlong header for n={n}", 0)
    return n, 8


def graph6_decode(data: bytes | str) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' prefix tolerated)."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII input", exc.start) from None
    data = data.strip()
    if data.startswith(_HEADER_PREFIX):
        data = data[len(_HEADER_PREFIX):]
    if not data:
        raise Graph6Error("empty graph6 input", 0)
    n, pos = _decode_order(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    got = len(data) - pos
    if got != nbytes:
        raise Graph6Error(
            f"body length mismatch for n={n}: expected {nbytes} bytes, got {got}", pos
        )
    adj = [0] * n
    i = 0
    j = 1
    remaining = nbits
    for t in range(nbytes):
        val = _group(data, pos + t)
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if remaining:
                if bit:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
                remaining -= 1
            elif bit:
                raise Graph6Error("nonzero padding bits", pos + t)
    return _graph_from_adj(n, adj)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per nonblank line; errors carry the 1-based line number."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(graph6_decode(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.args[0]}", exc.position) from None
    return graphs
