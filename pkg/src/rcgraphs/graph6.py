"""graph6 encoding and decoding (bit-exact with the format used by nauty/geng)."""

from __future__ import annotations

from .graph import DEFAULT_MAX_ORDER, GraphError, SizeCapExceeded, SmallGraph

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_order(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n < 1 << 36:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise Graph6Error(f"order {n} too large for graph6")


def g6_encode(g: SmallGraph) -> str:
    out = _encode_order(g.n)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated order field")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated order field")
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    return n, 4


def g6_decode(text: str, max_order: int = DEFAULT_MAX_ORDER) -> SmallGraph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("graph6 must be printable ASCII") from exc
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error(f"illegal character in graph6 string {s!r}")
    n, pos = _decode_order(data)
    if n > max_order:
        raise SizeCapExceeded(f"order {n} exceeds cap {max_order}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit string: expected {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data after {need} bytes")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits")
    return SmallGraph(n, tuple(rows))
