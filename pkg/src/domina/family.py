"""Graphs with domination number ``floor(sqrt(n))`` built from an (H1, H2) pair.

A decomposition holds a graph ``H1`` on ``k`` vertices ``v_0..v_{k-1}``, a
graph ``H2`` whose vertices are split into parts ``V_0..V_{k-1}`` and a last
part ``v_last``, and the cross edges between the two sides. Every vertex of
``V_i`` crosses to ``v_i`` alone, and every vertex of ``v_last`` crosses to at
least two vertices of ``H1``. Indices are 0-based throughout, both for H1
vertices and for the index sets ``I`` used by condition (C).

When condition (C) also holds the composed graph has domination number
exactly ``k``, and every connected graph on ``n >= 4`` vertices with
domination number ``floor(sqrt(n))`` arises this way from any of its minimum
dominating sets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .classifier import isqrt_floor
from .domination import dominated_by, gamma, private_neighbors
from .errors import (
    CrossEdgeViolation,
    Disconnected,
    EmptyPartForNonIsolated,
    GraphTooSmall,
    NotGammaSet,
    PartitionInvalid,
    ProblemTooLarge,
    SizeBoundViolated,
    VLastUnderConnected,
    WrongCardinality,
)
from .generators import SplitMix64, probability_threshold
from .graph import Graph, VertexSet, compress_mask, from_edges, induced_subgraph, is_connected, iter_bits
from .graph6 import parse_graph6, to_graph6_str

DEFAULT_MAX_ORDER = 40


@dataclass(frozen=True)
class FamilyDecomposition:
    """``cross[w]`` is the bitmask of H1 vertices adjacent to H2 vertex ``w``."""

    h1: Graph
    h2: Graph
    parts: tuple[VertexSet, ...]
    v_last: VertexSet
    cross: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.h1.n

    @property
    def order(self) -> int:
        return self.h1.n + self.h2.n

    def cross_pairs(self) -> list[tuple[int, int]]:
        return [(w, i) for w, mask in enumerate(self.cross) for i in iter_bits(mask)]

    @classmethod
    def from_parts(
        cls,
        h1: Graph,
        h2: Graph,
        parts: Sequence[Iterable[int]],
        v_last: Iterable[int] = (),
        *,
        v_last_cross: Mapping[int, Iterable[int]] | None = None,
        cross: Iterable[Sequence[int]] | None = None,
    ) -> FamilyDecomposition:
        """Assemble a decomposition from plain index lists.

        Without ``cross`` the cross edges are the forced ones (``V_i`` to
        ``v_i``) plus whatever ``v_last_cross`` lists for last-part vertices.
        With ``cross`` the given ``(h2_vertex, h1_vertex)`` pairs are used as-is.
        Nothing is validated here; see :func:`validate_decomposition`.
        """
        part_sets = tuple(VertexSet.of(p, h2.n) for p in parts)
        last = VertexSet.of(v_last, h2.n)
        masks = [0] * h2.n
        if cross is None:
            for i, part in enumerate(part_sets):
                for w in part:
                    masks[w] |= 1 << i
            for w, partners in (v_last_cross or {}).items():
                for i in partners:
                    masks[w] |= 1 << i
        else:
            for w, i in cross:
                if not (0 <= w < h2.n and 0 <= i < h1.n):
                    raise PartitionInvalid(f"cross pair ({w}, {i}) out of range")
                masks[w] |= 1 << i
        return cls(h1, h2, part_sets, last, tuple(masks))

    # serialisation

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "h1": to_graph6_str(self.h1),
            "h2": to_graph6_str(self.h2),
            "parts": [p.to_list() for p in self.parts],
            "v_last": self.v_last.to_list(),
            "cross": [list(p) for p in self.cross_pairs()],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> FamilyDecomposition:
        h1 = parse_graph6(data["h1"])
        h2 = parse_graph6(data["h2"])
        if "k" in data and data["k"] != h1.n:
            raise PartitionInvalid(f"k={data['k']} but H1 has {h1.n} vertices")
        try:
            parts = [list(p) for p in data["parts"]]
            v_last = list(data.get("v_last", []))
            cross = [tuple(p) for p in data["cross"]] if "cross" in data else None
            return cls.from_parts(h1, h2, parts, v_last, cross=cross)
        except (ValueError, TypeError) as exc:
            raise PartitionInvalid(str(exc)) from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> FamilyDecomposition:
        return cls.from_dict(json.loads(text))


def validate_decomposition(d: FamilyDecomposition) -> None:
    """Raise the first structural violation found, checked in a fixed order."""
    k, m = d.k, d.h2.n
    if len(d.parts) != k:
        raise PartitionInvalid(f"expected {k} parts, got {len(d.parts)}")
    if len(d.cross) != m or any(mask >> k for mask in d.cross):
        raise PartitionInvalid("cross relation does not match the vertex counts")
    seen = 0
    for block in (*d.parts, d.v_last):
        if block.universe != m:
            raise PartitionInvalid("part indexes the wrong vertex universe")
        if seen & block.bits:
            raise PartitionInvalid("parts overlap")
        seen |= block.bits
    if seen != (1 << m) - 1:
        raise PartitionInvalid("parts do not cover every vertex of H2")
    if not k * (k - 1) <= m <= k * k + k:
        raise SizeBoundViolated(f"|V(H2)| = {m} outside [{k * (k - 1)}, {k * k + k}]")
    for i, part in enumerate(d.parts):
        if d.h1.rows[i] and not part:
            raise EmptyPartForNonIsolated(f"v_{i} is not isolated in H1 but V_{i} is empty")
    for i, part in enumerate(d.parts):
        for w in part:
            if d.cross[w] != 1 << i:
                raise CrossEdgeViolation(f"H2 vertex {w} in V_{i} must cross to v_{i} only")
    for w in d.v_last:
        if d.cross[w].bit_count() < 2:
            raise VLastUnderConnected(f"H2 vertex {w} in the last part crosses fewer than two H1 vertices")


def build_family_graph(d: FamilyDecomposition) -> tuple[Graph, tuple[tuple[str, int], ...]]:
    """Compose G; vertex ``i < k`` is ``v_i`` and vertex ``k + w`` is H2 vertex ``w``."""
    validate_decomposition(d)
    k = d.k
    edges = list(d.h1.edges())
    edges += [(k + a, k + b) for a, b in d.h2.edges()]
    edges += [(k + w, i) for w, i in d.cross_pairs()]
    labels = tuple(("h1", i) for i in range(k)) + tuple(("h2", w) for w in range(d.h2.n))
    return from_edges(d.order, edges), labels


def _index_mask(i_set: Iterable[int], k: int) -> int:
    mask = 0
    for i in i_set:
        if not 0 <= i < k:
            raise ValueError(f"index {i} outside 0..{k - 1}")
        mask |= 1 << i
    return mask


def _restricted_h2_mask(d: FamilyDecomposition, imask: int) -> int:
    outside = ((1 << d.k) - 1) & ~imask
    mask = 0
    for i in iter_bits(imask):
        mask |= d.parts[i].bits
    for w in d.v_last:
        if not d.cross[w] & outside:
            mask |= 1 << w
    return mask


def _outside_boundary(d: FamilyDecomposition, imask: int) -> int:
    """H1 vertices ``v_j`` (j in I) adjacent to some ``v_i`` with i outside I."""
    outside = ((1 << d.k) - 1) & ~imask
    out = 0
    for i in iter_bits(outside):
        out |= d.h1.rows[i]
    return out & imask


def restricted_subgraphs(
    d: FamilyDecomposition, i_set: Iterable[int]
) -> tuple[Graph, Graph, tuple[dict[int, int], dict[int, int]]]:
    """``H1[{v_i : i in I}]`` and ``H2`` restricted to the parts in ``I`` plus the
    last-part vertices with no cross edge leaving ``I``, with their vertex maps."""
    imask = _index_mask(i_set, d.k)
    h1_i, map1 = induced_subgraph(d.h1, VertexSet(imask, d.k))
    h2_i, map2 = induced_subgraph(d.h2, VertexSet(_restricted_h2_mask(d, imask), d.h2.n))
    return h1_i, h2_i, (map1, map2)


def boundary_sets(
    d: FamilyDecomposition, s: VertexSet | Iterable[int], i_set: Iterable[int]
) -> tuple[VertexSet, VertexSet]:
    """``(N_H1(S), N_{H1^I}(complement of I))`` as subsets of H1."""
    smask = s.bits if isinstance(s, VertexSet) else VertexSet.of(s, d.h2.n).bits
    imask = _index_mask(i_set, d.k)
    nh1 = 0
    for w in iter_bits(smask):
        nh1 |= d.cross[w]
    return VertexSet(nh1, d.k), VertexSet(_outside_boundary(d, imask), d.k)


class ConditionCResult(NamedTuple):
    ok: bool
    witness: tuple[tuple[int, ...], VertexSet] | None


def check_condition_c(d: FamilyDecomposition, max_order: int = DEFAULT_MAX_ORDER, *,
                      literal: bool = False) -> ConditionCResult:
    """Exhaustive check of condition (C).

    Index sets ``I`` run by size then lexicographically, and within each the
    candidate sets ``S`` of size at most ``|I| - 1`` likewise; the first
    violating pair is the witness. The empty set dominates only the empty graph.

    By default ``S`` is any subset of ``V(H2)`` whose closed H2-neighbourhood
    covers ``V(H2^I)``, and ``(I, S)`` violates the condition when every
    ``v_i`` (i in I) lies in ``N_H1(S)`` or the outside boundary. Under this
    reading a decomposition passes exactly when the built graph has domination
    number ``k``, and a witness converts to a smaller dominating set (see
    :func:`witness_dominating_set`).

    ``literal=True`` restricts ``S`` to ``V(H2^I)`` and compares the size of
    the whole union with ``|I| - 1``. Passing that version does not force
    domination number ``k``: a last-part vertex outside ``H2^I`` can still
    dominate into it.
    """
    validate_decomposition(d)
    if d.order > max_order:
        raise ProblemTooLarge(f"condition (C) enumeration refused for order {d.order} > {max_order}")
    k = d.k
    h2_closed = d.h2.closed_rows()
    cross = d.cross
    every = (1 << d.h2.n) - 1
    for s in range(1, k + 1):
        for combo in itertools.combinations(range(k), s):
            imask = 0
            for i in combo:
                imask |= 1 << i
            target = _restricted_h2_mask(d, imask)
            base = _outside_boundary(d, imask)
            if literal:
                pool = target
                need = None
            else:
                # vertices touching neither the target nor I never shorten a witness
                pool = 0
                for w in iter_bits(every):
                    if h2_closed[w] & target or cross[w] & imask:
                        pool |= 1 << w
                need = imask & ~base
            reach = base
            for w in iter_bits(pool):
                reach |= cross[w]
            if literal and reach.bit_count() <= s - 1:
                continue
            if not literal and need & ~reach:
                continue
            members = list(iter_bits(pool))
            for size in range(0, min(s - 1, len(members)) + 1):
                for chosen in itertools.combinations(members, size):
                    covered = 0
                    hits = 0
                    for w in chosen:
                        covered |= h2_closed[w]
                        hits |= cross[w]
                    if covered & target != target:
                        continue
                    if literal:
                        bad = (hits | base).bit_count() > s - 1
                    else:
                        bad = need & ~hits == 0
                    if bad:
                        smask = 0
                        for w in chosen:
                            smask |= 1 << w
                        return ConditionCResult(False, (combo, VertexSet(smask, d.h2.n)))
    return ConditionCResult(True, None)


def witness_dominating_set(d: FamilyDecomposition, witness: tuple[tuple[int, ...], VertexSet]) -> VertexSet:
    """``S`` together with ``{v_i : i not in I}`` as a vertex set of the built graph."""
    i_set, s = witness
    k = d.k
    bits = ((1 << k) - 1) & ~_index_mask(i_set, k)
    return VertexSet(bits | s.bits << k, d.order)


def extract_decomposition(g: Graph, gamma_set: VertexSet | Iterable[int], *,
                          gamma_value: int | None = None) -> FamilyDecomposition:
    """Decomposition induced by a minimum dominating set of a connected graph.

    ``H1 = G[gamma_set]``, ``H2`` is the rest, ``V_i`` is the set of external
    private neighbours of ``v_i`` and the last part collects vertices with two
    or more neighbours in ``gamma_set``. Both sides keep sorted vertex order.
    ``gamma_value`` skips the solver call when the domination number is known.
    """
    if g.n < 4:
        raise GraphTooSmall(f"need n >= 4, got {g.n}")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    smask = gamma_set.bits if isinstance(gamma_set, VertexSet) else VertexSet.of(gamma_set, g.n).bits
    if dominated_by(g, smask) != g.full_mask:
        raise NotGammaSet("set does not dominate the graph")
    k = smask.bit_count()
    if k != isqrt_floor(g.n):
        raise WrongCardinality(f"set has {k} vertices, floor(sqrt({g.n})) = {isqrt_floor(g.n)}")
    if gamma_value is None:
        gamma_value = gamma(g).value
    if gamma_value != k:
        raise NotGammaSet(f"set has {k} vertices but the domination number is {gamma_value}")
    inside = list(iter_bits(smask))
    outside = list(iter_bits(g.full_mask & ~smask))
    h1, _ = induced_subgraph(g, VertexSet(smask, g.n))
    h2, _ = induced_subgraph(g, VertexSet(g.full_mask & ~smask, g.n))
    cross = tuple(compress_mask(g.rows[x] & smask, inside) for x in outside)
    parts = tuple(
        VertexSet(compress_mask(private_neighbors(g, smask, v)[1].bits, outside), h2.n) for v in inside
    )
    v_last = 0
    for w, mask in enumerate(cross):
        if mask.bit_count() >= 2:
            v_last |= 1 << w
    return FamilyDecomposition(h1, h2, parts, VertexSet(v_last, h2.n), cross)


def is_in_family(g: Graph) -> bool:
    if g.n < 4:
        raise GraphTooSmall(f"need n >= 4, got {g.n}")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    return gamma(g).value == isqrt_floor(g.n)


def random_decomposition(seed: int, k_range: tuple[int, int] = (2, 4)) -> FamilyDecomposition:
    """A structurally valid decomposition; condition (C) may or may not hold.

    ``k`` and ``|V(H2)|`` are uniform over their ranges, ``H1`` is G(k, 1/2),
    every non-isolated ``v_i`` gets at least one part vertex, last-part vertices
    cross to a random subset of two or more H1 vertices, and H2 edges appear
    with a density drawn from {0, 0.15, 0.3, 0.5}.
    """
    rng = SplitMix64(seed)
    k = k_range[0] + rng.below(k_range[1] - k_range[0] + 1)
    m = k * (k - 1) + rng.below(2 * k + 1)
    half = probability_threshold(0.5)
    h1_edges = [(i, j) for j in range(1, k) for i in range(j) if rng.next() < half]
    h1 = from_edges(k, h1_edges)
    labels = [i for i in range(k) if h1.rows[i]]
    slots = k + 1 if k >= 2 else k
    labels += [rng.below(slots) for _ in range(m - len(labels))]
    for pos in range(m - 1, 0, -1):
        swap = rng.below(pos + 1)
        labels[pos], labels[swap] = labels[swap], labels[pos]
    parts: list[list[int]] = [[] for _ in range(k)]
    v_last: list[int] = []
    v_last_cross: dict[int, list[int]] = {}
    for w, label in enumerate(labels):
        if label < k:
            parts[label].append(w)
            continue
        v_last.append(w)
        while True:
            partners = [i for i in range(k) if rng.next() < half]
            if len(partners) >= 2:
                break
        v_last_cross[w] = partners
    density = probability_threshold((0.0, 0.15, 0.3, 0.5)[rng.below(4)])
    h2_edges = [(a, b) for b in range(1, m) for a in range(b) if rng.next() < density]
    h2 = from_edges(m, h2_edges)
    return FamilyDecomposition.from_parts(h1, h2, parts, v_last, v_last_cross=v_last_cross)
