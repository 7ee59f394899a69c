"""Square-root thresholds, the Nordhaus-Gaddum product and domination types.

``classify_fast`` only looks at connectivity, radius and diameter of ``G`` and
its complement, so it runs in polynomial time; ``classify_exact`` computes both
domination numbers and is exponential in the worst case.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .domination import gamma
from .errors import EmptyGraph, TooSmall
from .graph import INFINITE, Graph, complement, metrics


def isqrt_floor(n: int) -> int:
    return math.isqrt(n)


def isqrt_ceil(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


class Verdict(enum.Enum):
    TYPE_I = "TYPE_I"
    TYPE_II = "TYPE_II"
    SCC2_UNDECIDED = "SCC2_UNDECIDED"


class Reason(enum.IntEnum):
    """Branch of the decision tree that fired, numbered in evaluation order."""

    G_DISCONNECTED = 1
    GBAR_DISCONNECTED = 2
    DIAM_G_GE_3 = 3
    DIAM_GBAR_GE_3 = 4
    RAD_OR_DIAM_G_IS_1 = 5
    RAD_OR_DIAM_GBAR_IS_1 = 6
    NONE = 7


VERDICT_OF = {
    Reason.G_DISCONNECTED: Verdict.TYPE_II,
    Reason.GBAR_DISCONNECTED: Verdict.TYPE_I,
    Reason.DIAM_G_GE_3: Verdict.TYPE_II,
    Reason.DIAM_GBAR_GE_3: Verdict.TYPE_I,
    Reason.RAD_OR_DIAM_G_IS_1: Verdict.TYPE_I,
    Reason.RAD_OR_DIAM_GBAR_IS_1: Verdict.TYPE_II,
    Reason.NONE: Verdict.SCC2_UNDECIDED,
}


@dataclass(frozen=True)
class TypeDecision:
    verdict: Verdict
    reason: Reason

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason.name}


@dataclass(frozen=True)
class NGRecord:
    gamma_g: int
    gamma_gbar: int
    n: int

    @property
    def product_ok(self) -> bool:
        return self.gamma_g * self.gamma_gbar <= self.n


class ExactTypes(NamedTuple):
    type_i: bool
    type_ii: bool


def decision_codes(conn_g, conn_gbar, rad_g, diam_g, rad_gbar, diam_gbar):
    """Reason codes for the decision tree, elementwise over scalars or arrays.

    Radius and diameter entries are ignored where the matching graph is
    disconnected. The first matching branch wins.
    """
    conn_g = np.asarray(conn_g, dtype=bool)
    conn_gbar = np.asarray(conn_gbar, dtype=bool)
    both = conn_g & conn_gbar
    rad_g, diam_g = np.asarray(rad_g), np.asarray(diam_g)
    rad_gbar, diam_gbar = np.asarray(rad_gbar), np.asarray(diam_gbar)
    conditions = [
        ~conn_g,
        ~conn_gbar,
        both & (diam_g >= 3),
        both & (diam_gbar >= 3),
        both & ((diam_g == 1) | (rad_g == 1)),
        both & ((diam_gbar == 1) | (rad_gbar == 1)),
    ]
    choices = [int(r) for r in list(Reason)[:6]]
    return np.select(conditions, choices, default=int(Reason.NONE))


def scc_mask(t, conn_g, conn_gbar, rad_g, diam_g, rad_gbar, diam_gbar):
    """Elementwise SCC(t) membership from precomputed metrics."""
    conn = np.asarray(conn_g, dtype=bool) & np.asarray(conn_gbar, dtype=bool)
    return conn & (np.asarray(rad_g) == t) & (np.asarray(diam_g) == t) & (
        np.asarray(rad_gbar) == t) & (np.asarray(diam_gbar) == t)


def _metric_args(g: Graph) -> tuple:
    mg, mb = metrics(g), metrics(complement(g))

    def finite(x):
        return -1 if x is INFINITE else x

    return (mg.connected, mb.connected, finite(mg.radius), finite(mg.diameter),
            finite(mb.radius), finite(mb.diameter))


def is_scc(g: Graph, t: int) -> bool:
    """Both ``G`` and its complement connected with radius = diameter = ``t``."""
    if g.n == 0:
        return False
    return bool(scc_mask(t, *_metric_args(g)))


def classify_fast(g: Graph) -> TypeDecision:
    if g.n <= 1:
        raise TooSmall("classification needs at least two vertices")
    reason = Reason(int(decision_codes(*_metric_args(g))))
    return TypeDecision(VERDICT_OF[reason], reason)


def nordhaus_gaddum_check(g: Graph) -> NGRecord:
    if g.n == 0:
        raise EmptyGraph("Nordhaus-Gaddum check needs at least one vertex")
    return NGRecord(gamma(g).value, gamma(complement(g)).value, g.n)


def classify_exact(g: Graph) -> ExactTypes:
    record = nordhaus_gaddum_check(g)
    return types_from_gammas(record.gamma_g, record.gamma_gbar, g.n)


def types_from_gammas(gamma_g: int, gamma_gbar: int, n: int) -> ExactTypes:
    bound = isqrt_floor(n)
    return ExactTypes(gamma_g <= bound, gamma_gbar <= bound)
