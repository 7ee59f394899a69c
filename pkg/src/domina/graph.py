"""Immutable simple graphs over ``0..n-1`` stored as bit-vector adjacency rows.

Row ``v`` is a Python ``int`` whose bit ``u`` is set when ``uv`` is an edge, so
neighbourhood algebra is plain integer ``|``/``&``/``^`` and there is no upper
limit on the order beyond what the serialisers impose.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidVertex, LoopRejected


def _bits_list(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


_SMALL_BITS = tuple(_bits_list(m) for m in range(1 << 10))


def iter_bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    if mask < 1024:
        return _SMALL_BITS[mask]
    return _bits_list(mask)


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of ``0..universe-1`` packed into an integer bit-vector."""

    bits: int
    universe: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise InvalidVertex(f"bits {self.bits:#x} exceed universe {self.universe}")

    @classmethod
    def of(cls, members: Iterable[int], universe: int) -> VertexSet:
        bits = 0
        for v in members:
            if not 0 <= v < universe:
                raise InvalidVertex(f"vertex {v} outside 0..{universe - 1}")
            bits |= 1 << v
        return cls(bits, universe)

    @classmethod
    def empty(cls, universe: int) -> VertexSet:
        return cls(0, universe)

    @classmethod
    def full(cls, universe: int) -> VertexSet:
        return cls((1 << universe) - 1, universe)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(iter_bits(self.bits))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _same(self, other: VertexSet) -> None:
        if self.universe != other.universe:
            raise ValueError("vertex sets index different universes")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.bits | other.bits, self.universe)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.bits & other.bits, self.universe)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same(other)
        return VertexSet(self.bits & ~other.bits, self.universe)

    def issubset(self, other: VertexSet) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.universe) - 1) ^ self.bits, self.universe)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, universe={self.universe})"


class Graph:
    """Simple undirected graph; construct with :func:`from_edges` or from rows."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int], *, check: bool = True):
        rows = tuple(rows)
        if check:
            if n < 0 or len(rows) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
            for v, row in enumerate(rows):
                if row < 0 or row >> n:
                    raise InvalidVertex(f"row {v} references a vertex >= {n}")
                if row >> v & 1:
                    raise LoopRejected(f"loop at vertex {v}")
                for u in iter_bits(row):
                    if not rows[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rows = rows
        self._hash = None

    # structure

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.rows[v], self.n)

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.rows[v] | 1 << v, self.n)

    def closed_rows(self) -> list[int]:
        return [row | 1 << v for v, row in enumerate(self.rows)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row >> (u + 1) << (u + 1))]

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self.rows)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def complement(self) -> Graph:
        return complement(self)

    # dunder

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated pairs collapse to one edge."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise LoopRejected(f"loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.rows)], check=False)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


# metrics

class Unbounded(enum.Enum):
    """Distance value for vertex pairs in different components."""

    INFINITE = "INFINITE"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Unbounded.INFINITE
Distance = Union[int, Unbounded]


@dataclass(frozen=True)
class Metrics:
    ecc: tuple[Distance, ...]
    radius: Distance
    diameter: Distance

    @property
    def connected(self) -> bool:
        return self.diameter is not INFINITE


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Shortest-path distances from ``source``; ``None`` marks unreachable vertices."""
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.rows[v]):
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def eccentricity(g: Graph, v: int) -> Distance:
    """Eccentricity of ``v`` by frontier expansion over bit rows."""
    full = g.full_mask
    seen = frontier = 1 << v
    depth = 0
    rows = g.rows
    while seen != full:
        grow = 0
        for u in iter_bits(frontier):
            grow |= rows[u]
        frontier = grow & ~seen
        if not frontier:
            return INFINITE
        seen |= frontier
        depth += 1
    return depth


def metrics(g: Graph) -> Metrics:
    """Eccentricities, radius and diameter.

    A disconnected graph has every eccentricity INFINITE. The order-0 graph is
    reported with radius and diameter 0.
    """
    if g.n == 0:
        return Metrics((), 0, 0)
    ecc = tuple(eccentricity(g, v) for v in range(g.n))
    if INFINITE in ecc:
        return Metrics((INFINITE,) * g.n, INFINITE, INFINITE)
    return Metrics(ecc, min(ecc), max(ecc))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by their smallest vertex."""
    remaining = g.full_mask
    out = []
    rows = g.rows
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            grow = 0
            for u in iter_bits(frontier):
                grow |= rows[u]
            frontier = grow & ~seen
            seen |= frontier
        out.append(VertexSet(seen, g.n))
        remaining &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    """True for graphs with exactly one component (the order-0 graph is not)."""
    if g.n == 0:
        return False
    return _reach(g.rows, 1, g.full_mask) == g.full_mask


def _reach(rows: Sequence[int], start: int, within: int) -> int:
    seen = frontier = start
    while frontier:
        grow = 0
        for u in iter_bits(frontier):
            grow |= rows[u]
        frontier = grow & within & ~seen
        seen |= frontier
    return seen


def induces_connected(g: Graph, mask: int) -> bool:
    """Whether ``G[mask]`` is connected (non-empty)."""
    if not mask:
        return False
    return _reach(g.rows, mask & -mask, mask) == mask


def compress_mask(mask: int, members: Sequence[int]) -> int:
    """Re-index ``mask`` onto positions of ``members`` (sorted vertex list)."""
    out = 0
    for new, old in enumerate(members):
        if mask >> old & 1:
            out |= 1 << new
    return out


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[s]`` relabelled in sorted order, plus the old-to-new vertex map."""
    if isinstance(s, VertexSet):
        if s.universe != g.n:
            raise ValueError("vertex set universe does not match graph order")
        members = s.to_list()
    else:
        members = sorted(set(s))
        for v in members:
            if not 0 <= v < g.n:
                raise InvalidVertex(f"vertex {v} outside 0..{g.n - 1}")
    rows = [compress_mask(g.rows[v], members) for v in members]
    return Graph(len(members), rows, check=False), {old: new for new, old in enumerate(members)}
