"""graph6 and edgelist encodings.

graph6 follows the standard format: a size header (one byte ``63 + n`` for
``n <= 62``, otherwise ``126`` plus three 6-bit bytes) followed by the
upper triangle of the adjacency matrix in column order, six bits per byte,
each byte offset by 63, zero padded.

The edgelist format is UTF-8 text: the first non-comment line is ``n``,
every other line is ``u v``.  Lines starting with ``#`` and blank lines are
ignored; duplicate edges are merged, self-loops are rejected.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import MAX_VERTICES, Graph, GraphError

FORMATS = ("graph6", "edgelist")
_G6_HEADER = b">>graph6<<"


class ParseError(GraphError):
    """Raised when an encoded graph is malformed."""


def _as_bytes(data: bytes | str) -> bytes:
    return data.encode("ascii") if isinstance(data, str) else bytes(data)


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        out = bytearray([63 + n])
    else:
        out = bytearray([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    s = _as_bytes(data).strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    if any(b < 63 or b > 126 for b in s):
        raise ParseError("graph6 byte outside 63..126")
    if s[0] < 126:
        n, body = s[0] - 63, s[1:]
    else:
        if len(s) < 4 or s[1] == 126:
            raise ParseError("unsupported or truncated graph6 size header")
        n = (s[1] - 63) << 12 | (s[2] - 63) << 6 | (s[3] - 63)
        if n <= 62:
            raise ParseError(f"non-canonical graph6 size field for n={n}")
        body = s[4:]
    if n > MAX_VERTICES:
        raise ParseError(f"graph has {n} vertices, at most {MAX_VERTICES} supported")
    total = n * (n - 1) // 2
    if len(body) != (total + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {(total + 5) // 6} for n={n}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - total
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise ParseError("nonzero graph6 padding bits")
    return Graph._trusted(n, tuple(adj))


def encode_edgelist(g: Graph) -> bytes:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return ("\n".join(lines) + "\n").encode("utf-8")


def decode_edgelist(data: bytes | str) -> Graph:
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(x) for x in fields]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError(f"line {lineno}: header must be a single vertex count")
            n = nums[0]
            if n > MAX_VERTICES:
                raise ParseError(f"graph has {n} vertices, at most {MAX_VERTICES} supported")
            continue
        if len(nums) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range for n={n}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex-count header")
    return Graph.from_edges(n, edges)


def parse_graph(data: bytes | str, format: str = "graph6") -> Graph:
    if format == "graph6":
        return decode_graph6(data)
    if format == "edgelist":
        return decode_edgelist(data)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def write_graph(g: Graph, format: str = "graph6") -> bytes:
    if format == "graph6":
        return encode_graph6(g)
    if format == "edgelist":
        return encode_edgelist(g)
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def iter_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph | ParseError]]:
    """Decode newline-delimited graph6, yielding ``(line_number, graph_or_error)``.

    Blank lines are skipped; a malformed line yields its :class:`ParseError`
    instead of raising so batch callers can keep going.
    """
    for lineno, line in enumerate(lines, 1):
        raw = _as_bytes(line).strip()
        if not raw:
            continue
        try:
            yield lineno, decode_graph6(raw)
        except ParseError as exc:
            yield lineno, exc


def write_graph6_lines(graphs: Iterable[Graph]) -> bytes:
    return b"".join(encode_graph6(g) + b"\n" for g in graphs)
