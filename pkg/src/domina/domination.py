"""Exact domination numbers, dominating-set predicates and private neighbours.

``gamma`` and ``gamma_total`` share one branch-and-bound over a set-cover view
of the problem: picking vertex ``u`` covers its closed neighbourhood (plain
domination) or its open neighbourhood (total domination, since a set ``D`` is
total dominating exactly when every vertex has a neighbour in ``D``).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ConnectedDominationUndefined,
    EmptyGraph,
    NotDominating,
    NotInSet,
    TotalDominationUndefined,
)
from .graph import Graph, VertexSet, induces_connected, is_connected, iter_bits


class Variant(enum.Enum):
    PLAIN = "plain"
    TOTAL = "total"
    CONNECTED = "connected"


@dataclass(frozen=True)
class DominationCertificate:
    variant: Variant
    value: int
    witness: VertexSet

    def verify(self, g: Graph) -> bool:
        """Re-check the witness against ``g`` for this certificate's variant."""
        if len(self.witness) != self.value:
            return False
        if self.variant is Variant.PLAIN:
            return is_dominating(g, self.witness)
        if self.variant is Variant.TOTAL:
            return is_total_dominating(g, self.witness)
        return is_connected_dominating(g, self.witness)

    def to_dict(self) -> dict:
        return {"variant": self.variant.value, "value": self.value, "witness": self.witness.to_list()}


@dataclass(frozen=True)
class DegreeBounds:
    lower: int
    upper: int


def _mask(d: VertexSet | Iterable[int] | int, n: int) -> int:
    if isinstance(d, VertexSet):
        if d.universe != n:
            raise ValueError("vertex set universe does not match graph order")
        return d.bits
    if isinstance(d, int):
        return d
    return VertexSet.of(d, n).bits


def dominated_by(g: Graph, mask: int) -> int:
    covered = mask
    rows = g.rows
    for v in iter_bits(mask):
        covered |= rows[v]
    return covered


def is_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    return dominated_by(g, _mask(d, g.n)) == g.full_mask


def is_total_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    mask = _mask(d, g.n)
    if not is_dominating(g, mask):
        return False
    return all(g.rows[v] & mask for v in iter_bits(mask))


def is_connected_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    mask = _mask(d, g.n)
    return is_dominating(g, mask) and induces_connected(g, mask)


def private_neighbors(g: Graph, s: VertexSet | Iterable[int], v: int) -> tuple[VertexSet, VertexSet]:
    """``(pn[v, s], epn[v, s])``: vertices whose closed neighbourhood meets ``s`` only in ``v``."""
    smask = _mask(s, g.n)
    if not (0 <= v < g.n and smask >> v & 1):
        raise NotInSet(f"vertex {v} is not in the set")
    target = 1 << v
    pn = 0
    rows = g.rows
    for w in iter_bits(rows[v] | target):
        if (rows[w] | 1 << w) & smask == target:
            pn |= 1 << w
    return VertexSet(pn, g.n), VertexSet(pn & ~smask, g.n)


def is_minimal_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    """Minimality via private neighbours: every member must own at least one."""
    mask = _mask(d, g.n)
    if dominated_by(g, mask) != g.full_mask:
        raise NotDominating("set does not dominate the graph")
    return all(private_neighbors(g, mask, v)[0] for v in iter_bits(mask))


def degree_bounds(g: Graph) -> DegreeBounds:
    if g.n == 0:
        raise EmptyGraph("degree bounds need at least one vertex")
    delta = g.max_degree
    return DegreeBounds(lower=-(-g.n // (1 + delta)), upper=g.n - delta)


def _greedy_cover(sets: list[int], full: int) -> int:
    chosen = 0
    covered = 0
    while covered != full:
        best_u, best_gain = -1, 0
        for u, cov in enumerate(sets):
            gain = (cov & ~covered).bit_count()
            if gain > best_gain:
                best_u, best_gain = u, gain
        if best_u < 0:
            raise ValueError("instance has an uncoverable element")
        chosen |= 1 << best_u
        covered |= sets[best_u]
    return chosen


def greedy_dominating_set(g: Graph) -> VertexSet:
    """Pick the vertex dominating the most undominated vertices, lowest index on ties."""
    return VertexSet(_greedy_cover(g.closed_rows(), g.full_mask), g.n)


def _root_candidates(sets: list[int]) -> int:
    """Drop vertices whose cover set is contained in another's; keep the lowest of equal sets."""
    keep = 0
    for u, su in enumerate(sets):
        for w, sw in enumerate(sets):
            if w != u and su & ~sw == 0 and (su != sw or w < u):
                break
        else:
            keep |= 1 << u
    return keep


def _min_cover(sets: list[int], full: int) -> int:
    """Minimum-cardinality set of indices whose ``sets`` union to ``full``."""
    if not full:
        return 0
    n = len(sets)
    cands = _root_candidates(sets)
    hitters = [0] * n
    for u in iter_bits(cands):
        for v in iter_bits(sets[u]):
            hitters[v] |= 1 << u
    best = _greedy_cover(sets, full)
    maxcov = max(sets[u].bit_count() for u in iter_bits(cands))
    best_size = best.bit_count()
    if best_size <= -(-full.bit_count() // maxcov):
        return best

    def search(chosen: int, covered: int, size: int, cands: int) -> None:
        nonlocal best, best_size
        if covered == full:
            if size < best_size:
                best, best_size = chosen, size
            return
        uncovered = full & ~covered
        if size + -(-uncovered.bit_count() // maxcov) >= best_size:
            return
        pick, fewest = -1, n + 1
        for v in iter_bits(uncovered):
            c = (hitters[v] & cands).bit_count()
            if c < fewest:
                pick, fewest = v, c
                if c <= 1:
                    break
        if fewest == 0:
            return
        options = sorted(
            iter_bits(hitters[pick] & cands),
            key=lambda u: (-(sets[u] & uncovered).bit_count(), u),
        )
        for u in options:
            search(chosen | 1 << u, covered | sets[u], size + 1, cands)
            cands &= ~(1 << u)

    search(0, 0, 0, cands)
    return best


def gamma(g: Graph) -> DominationCertificate:
    """Domination number with a witness, by branch-and-bound."""
    if g.n == 0:
        raise EmptyGraph("domination number needs at least one vertex")
    best = _min_cover(g.closed_rows(), g.full_mask)
    return DominationCertificate(Variant.PLAIN, best.bit_count(), VertexSet(best, g.n))


def gamma_total(g: Graph) -> DominationCertificate:
    if g.n == 0:
        raise EmptyGraph("total domination number needs at least one vertex")
    if g.has_isolated_vertex():
        raise TotalDominationUndefined("graph has an isolated vertex")
    best = _min_cover(list(g.rows), g.full_mask)
    return DominationCertificate(Variant.TOTAL, best.bit_count(), VertexSet(best, g.n))


def gamma_connected(g: Graph) -> DominationCertificate:
    """Connected domination number, enumerating sets by increasing size from γ."""
    if not is_connected(g):
        raise ConnectedDominationUndefined("graph is not connected")
    closed = g.closed_rows()
    full = g.full_mask
    for size in range(gamma(g).value, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = 0
            mask = 0
            for v in combo:
                covered |= closed[v]
                mask |= 1 << v
            if covered == full and induces_connected(g, mask):
                return DominationCertificate(Variant.CONNECTED, size, VertexSet(mask, g.n))
    raise AssertionError("a connected graph always has a connected dominating set")


def solve(g: Graph, variant: Variant | str = Variant.PLAIN) -> DominationCertificate:
    variant = Variant(variant)
    if variant is Variant.PLAIN:
        return gamma(g)
    if variant is Variant.TOTAL:
        return gamma_total(g)
    return gamma_connected(g)
