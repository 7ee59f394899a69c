"""graph6 encoding for graphs of order at most 62.

Only the single-byte size header is supported; a leading ``~`` (the multi-byte
form) is rejected rather than misread. Data bits follow the usual column-major
upper-triangle order ``(0,1), (0,2), (1,2), (0,3), ...``, six bits per
character, most significant first, each character offset by 63.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator

from .errors import MalformedGraph6, UnsupportedOrder
from .graph import Graph

MAX_ORDER = 62
HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise MalformedGraph6("non-ASCII character") from exc
    return bytes(text)


def parse_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text).strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise MalformedGraph6("empty graph6 string")
    for ch in data:
        if not 63 <= ch <= 126:
            raise MalformedGraph6(f"character {ch!r} outside 63..126")
    if data[0] == 126:
        raise UnsupportedOrder(f"multi-byte order header; only n <= {MAX_ORDER} is supported")
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = data[1:]
    if len(body) != nchars:
        raise MalformedGraph6(f"expected {nchars} data characters for n={n}, got {len(body)}")
    value = 0
    for ch in body:
        value = value << 6 | (ch - 63)
    pad = nchars * 6 - nbits
    if value & ((1 << pad) - 1):
        raise MalformedGraph6("non-zero padding bits")
    value >>= pad
    rows = [0] * n
    bit = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit -= 1
    return Graph(n, rows, check=False)


def to_graph6(g: Graph) -> bytes:
    n = g.n
    if n > MAX_ORDER:
        raise UnsupportedOrder(f"graph6 output supports n <= {MAX_ORDER}, got {n}")
    value = 0
    rows = g.rows
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (rows[i] >> j & 1)
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    value <<= nchars * 6 - nbits
    out = bytearray([n + 63])
    for pos in range(nchars - 1, -1, -1):
        out.append((value >> (6 * pos) & 63) + 63)
    return bytes(out)


def to_graph6_str(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors carry the line number."""
    for number, line in enumerate(lines, start=1):
        raw = _as_bytes(line).strip()
        if not raw:
            continue
        try:
            yield number, parse_graph6(raw)
        except MalformedGraph6 as exc:
            raise MalformedGraph6(str(exc), line=number) from exc
        except UnsupportedOrder as exc:
            raise MalformedGraph6(str(exc), line=number) from exc


def read_graph6(stream: IO) -> list[Graph]:
    return [g for _, g in iter_graph6(stream)]


def write_graph6(graphs: Iterable[Graph], stream: IO[str]) -> None:
    for g in graphs:
        stream.write(to_graph6_str(g) + "\n")
