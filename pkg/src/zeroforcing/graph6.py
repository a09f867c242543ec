"""graph6 encoding and graph6/sparse6 decoding.

Vertex order is preserved exactly; nothing here canonicalizes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


def _data_values(text: str) -> list[int]:
    out = []
    for ch in text:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {ch!r} outside the printable range 63..126")
        out.append(c - 63)
    return out


def _decode_n(vals: list[int]) -> tuple[int, int]:
    """Decode the vertex-count prefix; return ``(n, chars consumed)``."""
    if not vals:
        raise Graph6Error("missing length prefix")
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) < 4:
        raise Graph6Error("truncated length prefix")
    if vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n < 63:
            raise Graph6Error("non-minimal length prefix")
        return n, 4
    if len(vals) < 8:
        raise Graph6Error("truncated length prefix")
    n = 0
    for v in vals[2:8]:
        n = (n << 6) | v
    if n < 258048:
        raise Graph6Error("non-minimal length prefix")
    return n, 8


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise Graph6Error(f"graph too large for graph6: n={n}")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty input")
    if s.startswith(":"):
        raise Graph6Error("sparse6 input given to the graph6 decoder")
    vals = _data_values(s)
    n, used = _decode_n(vals)
    body = vals[used:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise Graph6Error(f"expected {need} data characters for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6Error("trailing characters after graph6 data")
    masks = [0] * n
    k = 0
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k += 1
    return Graph(n, masks)


@lru_cache(maxsize=1024)
def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    vals = _encode_n(g.n)
    bits = []
    masks = g.masks
    for j in range(1, g.n):
        for i in range(j):
            bits.append((masks[i] >> j) & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        vals.append(chunk)
    return "".join(chr(v + 63) for v in vals)


def parse_sparse6(text: str) -> Graph:
    """Decode one sparse6 line. Loops and multi-edges are rejected."""
    s = text.strip()
    if s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER):]
    if not s.startswith(":"):
        raise Graph6Error("sparse6 lines start with ':'")
    vals = _data_values(s[1:])
    n, used = _decode_n(vals)
    data = vals[used:]
    k = 1
    while (1 << k) < n:
        k += 1
    bits = []
    for d in data:
        bits.extend((d >> s_) & 1 for s_ in range(5, -1, -1))

    masks = [0] * n
    v = 0
    pos = 0
    while pos < len(bits):
        b = bits[pos]
        pos += 1
        if pos + k > len(bits):
            break
        x = 0
        for _ in range(k):
            x = (x << 1) | bits[pos]
            pos += 1
        if b:
            v += 1
        if x > v:
            v = x
        elif v < n:
            if x >= n:
                raise Graph6Error("sparse6 vertex index out of range")
            if x == v:
                raise Graph6Error("sparse6 self-loop; only simple graphs are supported")
            if (masks[x] >> v) & 1:
                raise Graph6Error("sparse6 multi-edge; only simple graphs are supported")
            masks[x] |= 1 << v
            masks[v] |= 1 << x
        if v >= n:
            break
    return Graph(n, masks)


def parse_line(text: str) -> Graph:
    """Decode a graph6 or sparse6 line, dispatching on the leading ':'."""
    s = text.strip()
    if s.startswith(SPARSE6_HEADER) or s.startswith(":"):
        return parse_sparse6(s)
    return parse_graph6(s)


def iter_lines(lines: Iterable[str]) -> Iterator[str]:
    """Non-blank lines with trailing newlines removed."""
    for line in lines:
        line = line.strip()
        if line:
            yield line

