"""graph6 encoding, as written by nauty's geng and read by most graph tools.

Only the two size headers needed below 65 vertices are produced, but the
4-byte header (n >= 63) is handled in both directions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import CapacityError, Graph6Error
from .graph_core import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """Encode ``g``; upper-triangle bits column by column, six per character."""
    n = g.n
    rows = g.rows
    bits = []
    for j in range(1, n):
        rj = rows[j]
        bits.extend(rj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = [
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    ]
    return _encode_n(n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if s[0] == "~":
        if len(s) > 1 and s[1] == "~":
            raise Graph6Error("8-byte size header is beyond capacity")
        if len(s) < 4:
            raise Graph6Error("truncated size header")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string encodes {n} vertices; capacity is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for c in body:
        val = ord(c) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("non-zero padding bits")
                continue
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_rows(rows)


def read_graph6_stream(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """Yield one graph per non-blank line."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(emit_graph6(g) + "\n")
