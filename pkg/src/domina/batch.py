"""Column-wise invariants for a population of same-order graphs.

A :class:`Population` wraps an ``(M, n)`` array of adjacency rows and computes
each invariant lazily for all ``M`` graphs at once. Domination numbers of
graphs with ``n <= 8`` come from a vectorised scan of vertex subsets by
increasing size (the lexicographically first minimum dominating set is kept as
witness); larger orders fall back to the per-graph branch-and-bound solver.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from .domination import gamma
from .generators import masks_to_rows, row_dtype
from .graph import Graph

SUBSET_SCAN_MAX_ORDER = 8


def _closed(rows: np.ndarray, n: int) -> np.ndarray:
    dtype = rows.dtype.type
    return rows | (dtype(1) << np.arange(n, dtype=rows.dtype))


def _complement(rows: np.ndarray, n: int) -> np.ndarray:
    dtype = rows.dtype.type
    full = dtype((1 << n) - 1)
    return (full ^ rows) ^ (dtype(1) << np.arange(n, dtype=rows.dtype))


def radius_diameter(rows: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(connected, radius, diameter)`` per graph; radius/diameter are -1 when disconnected."""
    count = rows.shape[0]
    if n == 0:
        zeros = np.zeros(count, dtype=np.int16)
        return np.zeros(count, dtype=bool), zeros, zeros.copy()
    if n == 1:
        zeros = np.zeros(count, dtype=np.int16)
        return np.ones(count, dtype=bool), zeros, zeros.copy()
    full = rows.dtype.type((1 << n) - 1)
    closed = _closed(rows, n)
    ecc = np.full(rows.shape, -1, dtype=np.int16)
    reach = closed
    ecc[reach == full] = 1
    for depth in range(2, n):
        grown = reach.copy()
        for u in range(n):
            has_u = (reach >> rows.dtype.type(u)) & rows.dtype.type(1)
            grown |= has_u * closed[:, u:u + 1]
        if np.array_equal(grown, reach):
            break
        ecc[(grown == full) & (ecc < 0)] = depth
        reach = grown
        if (ecc >= 0).all():
            break
    connected = (ecc >= 0).all(axis=1)
    radius = np.where(connected, ecc.min(axis=1), -1).astype(np.int16)
    diameter = np.where(connected, ecc.max(axis=1), -1).astype(np.int16)
    return connected, radius, diameter


def subset_scan_gamma(rows: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Domination number and first minimum dominating set (as a bitmask) per graph."""
    count = rows.shape[0]
    values = np.zeros(count, dtype=np.int16)
    witness = np.zeros(count, dtype=np.int64)
    if n == 0:
        return values, witness
    full = rows.dtype.type((1 << n) - 1)
    closed = _closed(rows, n)
    pending = np.arange(count)
    for size in range(1, n + 1):
        if pending.size == 0:
            break
        sub = closed[pending]
        found = np.zeros(pending.size, dtype=bool)
        chosen = np.zeros(pending.size, dtype=np.int64)
        for combo in itertools.combinations(range(n), size):
            cover = sub[:, combo[0]].copy()
            for v in combo[1:]:
                cover |= sub[:, v]
            hit = (cover == full) & ~found
            if hit.any():
                chosen[hit] = sum(1 << v for v in combo)
                found |= hit
        values[pending[found]] = size
        witness[pending[found]] = chosen[found]
        pending = pending[~found]
    return values, witness


class Population:
    """Graphs of one order ``n`` as rows of an ``(M, n)`` unsigned array."""

    def __init__(self, n: int, rows: np.ndarray):
        rows = np.asarray(rows, dtype=row_dtype(max(n, 1)))
        if rows.ndim != 2 or rows.shape[1] != n:
            raise ValueError(f"expected an (M, {n}) row array, got shape {rows.shape}")
        self.n = n
        self.rows = rows

    @classmethod
    def from_masks(cls, n: int, masks: np.ndarray) -> Population:
        return cls(n, masks_to_rows(n, masks))

    @classmethod
    def from_graphs(cls, n: int, graphs: list[Graph]) -> Population:
        dtype = row_dtype(max(n, 1))
        rows = np.array([g.rows for g in graphs], dtype=dtype).reshape(len(graphs), n)
        return cls(n, rows)

    def __len__(self) -> int:
        return self.rows.shape[0]

    def graph(self, index: int) -> Graph:
        return Graph(self.n, [int(x) for x in self.rows[index]], check=False)

    def select(self, index: np.ndarray) -> Population:
        """Sub-population; already computed columns are carried over."""
        sub = Population(self.n, self.rows[index])
        for name, value in self.__dict__.items():
            if name in ("n", "rows"):
                continue
            sub.__dict__[name] = tuple(col[index] for col in value) if isinstance(value, tuple) else value[index]
        return sub

    @cached_property
    def complement_rows(self) -> np.ndarray:
        return _complement(self.rows, self.n)

    @cached_property
    def max_degree(self) -> np.ndarray:
        if self.n == 0:
            return np.zeros(len(self), dtype=np.int16)
        return np.bitwise_count(self.rows).max(axis=1).astype(np.int16)

    @cached_property
    def has_isolated(self) -> np.ndarray:
        return (self.rows == 0).any(axis=1)

    @cached_property
    def shape_g(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return radius_diameter(self.rows, self.n)

    @cached_property
    def shape_gbar(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return radius_diameter(self.complement_rows, self.n)

    @cached_property
    def gamma_g(self) -> tuple[np.ndarray, np.ndarray]:
        return self._gamma(self.rows)

    @cached_property
    def gamma_gbar(self) -> tuple[np.ndarray, np.ndarray]:
        return self._gamma(self.complement_rows)

    def _gamma(self, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if self.n <= SUBSET_SCAN_MAX_ORDER:
            return subset_scan_gamma(rows, self.n)
        values = np.zeros(rows.shape[0], dtype=np.int16)
        witness = np.zeros(rows.shape[0], dtype=object)
        for i, row in enumerate(rows):
            cert = gamma(Graph(self.n, [int(x) for x in row], check=False))
            values[i] = cert.value
            witness[i] = cert.witness.bits
        return values, witness

    def metric_args(self) -> tuple:
        conn_g, rad_g, diam_g = self.shape_g
        conn_b, rad_b, diam_b = self.shape_gbar
        return conn_g, conn_b, rad_g, diam_g, rad_b, diam_b
