"""Seeded random graphs and exhaustive labelled enumeration.

Random draws use SplitMix64 (Steele, Lea and Flood; public domain), chosen
because it is a few lines in any language, so a G(n, p) sample can be
reproduced bit-for-bit elsewhere:

* ``state += 0x9E3779B97F4A7C15`` then mix ``z = state``:
  ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``, ``z = (z ^ z>>27) * 0x94D049BB133111EB``,
  ``z ^= z>>31`` (all modulo 2**64).
* ``random_gnp`` visits pairs in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``
  and keeps a pair when the next output ``x`` satisfies ``x < floor(p * 2**64)``,
  with the threshold computed exactly from the binary value of ``p``.
* A sweep of many trials splits a master seed by taking trial ``t``'s seed to
  be output ``t`` (0-based) of a SplitMix64 stream seeded with the master seed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

import numpy as np

from .errors import EnumerationTooLarge, InvalidProbability
from .graph import Graph, is_connected

MASK64 = (1 << 64) - 1
MAX_ENUMERATION_ORDER = 8


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def split_seeds(seed: int, count: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.next() for _ in range(count)]


def probability_threshold(p: float) -> int:
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"p must lie in [0, 1], got {p}")
    return int(Fraction(p) * (1 << 64))


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs ``(i, j)``, ``i < j``, in graph6 column-major order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def random_gnp(n: int, p: float, seed: int) -> Graph:
    threshold = probability_threshold(p)
    rng = SplitMix64(seed)
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.next() < threshold:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows, check=False)


def _check_enumeration_order(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_ENUMERATION_ORDER:
        raise EnumerationTooLarge(
            f"labelled enumeration is limited to n <= {MAX_ENUMERATION_ORDER} "
            f"(2**28 graphs); got n={n}"
        )


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge ``b`` in :func:`pair_order` is present iff bit ``b`` of ``mask`` is set."""
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> bit & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows, check=False)


def enumerate_labeled(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, in increasing edge-mask order.

    Bit ``b`` of the mask is pair ``b`` of :func:`pair_order`. Limited to
    ``n <= 8``; beyond that there are more than 2**28 graphs.
    """
    _check_enumeration_order(n)
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


def masks_to_rows(n: int, masks: np.ndarray) -> np.ndarray:
    """Vectorised :func:`graph_from_mask`: ``(len(masks), n)`` array of adjacency rows."""
    dtype = row_dtype(n)
    masks = np.asarray(masks, dtype=np.uint64)
    rows = np.zeros((masks.shape[0], n), dtype=dtype)
    for bit, (i, j) in enumerate(pair_order(n)):
        present = ((masks >> np.uint64(bit)) & np.uint64(1)).astype(dtype)
        rows[:, i] |= present << dtype(j)
        rows[:, j] |= present << dtype(i)
    return rows


def row_dtype(n: int) -> type:
    if n <= 8:
        return np.uint8
    if n <= 16:
        return np.uint16
    if n <= 32:
        return np.uint32
    if n <= 64:
        return np.uint64
    raise ValueError(f"array rows support n <= 64, got {n}")
