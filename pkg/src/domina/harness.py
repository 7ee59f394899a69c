"""Sweeps that test domination theorems over graph populations.

Each predicate owns its hypothesis filter and its check, both vectorised over
a :class:`~domina.batch.Population`; the exhaustive, sampled and stream sweeps
only differ in where the population comes from. Work is split into chunks
whose partial results merge commutatively, so the report does not depend on
how chunks were scheduled.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .batch import Population
from .classifier import Reason, VERDICT_OF, Verdict, decision_codes, isqrt_ceil, isqrt_floor, scc_mask
from .errors import DominaError, InvalidProbability, ScanTooLarge
from .family import check_condition_c, extract_decomposition
from .generators import random_gnp, split_seeds
from .graph import Graph, VertexSet
from .graph6 import MAX_ORDER, iter_graph6, to_graph6_str

EXHAUSTIVE_MAX_ORDER = 7
EXHAUSTIVE_LIGHT_MAX_ORDER = 8
SAMPLED_MAX_ORDER = 20
DEFAULT_CHUNK = 1 << 18
DEFAULT_MAX_WITNESSES = 100


class PredicateId(enum.Enum):
    ORE_HALF_N = "ORE_HALF_N"
    JAEGER_PRODUCT = "JAEGER_PRODUCT"
    OBSERVATION_EITHER_TYPE = "OBSERVATION_EITHER_TYPE"
    DEGREE_BOUNDS = "DEGREE_BOUNDS"
    NECESSARY_DELTA = "NECESSARY_DELTA"
    BRIGHAM_DIAM = "BRIGHAM_DIAM"
    SUFFICIENT_CONDITIONS = "SUFFICIENT_CONDITIONS"
    CHARACTERIZATION_EQUIV = "CHARACTERIZATION_EQUIV"
    CLASSIFIER_SOUNDNESS = "CLASSIFIER_SOUNDNESS"
    SCC2_CONJECTURE = "SCC2_CONJECTURE"


@dataclass(frozen=True)
class Predicate:
    id: PredicateId
    hypothesis: Callable[[Population], np.ndarray]
    check: Callable[[Population], np.ndarray]
    notes: str
    # needs an exact domination number of (nearly) every graph in the population
    gamma_everywhere: bool = True
    theorem: bool = True


def _order_at_least(pop: Population, n: int) -> np.ndarray:
    return np.full(len(pop), pop.n >= n, dtype=bool)


def _gamma(pop: Population) -> np.ndarray:
    return pop.gamma_g[0].astype(np.int64)


def _gamma_bar(pop: Population) -> np.ndarray:
    return pop.gamma_gbar[0].astype(np.int64)


def _check_characterization(pop: Population) -> np.ndarray:
    n, k = pop.n, isqrt_floor(pop.n)
    values, witnesses = pop.gamma_g
    values = values.astype(np.int64)
    ok = np.ones(len(pop), dtype=bool)
    # another cardinality can never meet the part-size bounds of the family
    other = values != k
    g_other = values[other]
    h2 = n - g_other
    ok[other] = ~((g_other * (g_other - 1) <= h2) & (h2 <= g_other * g_other + g_other))
    for i in np.flatnonzero(~other):
        g = pop.graph(int(i))
        try:
            d = extract_decomposition(g, VertexSet(int(witnesses[i]), n), gamma_value=k)
            ok[i] = check_condition_c(d).ok
        except DominaError:
            ok[i] = False
    return ok


def _check_classifier(pop: Population) -> np.ndarray:
    bound = isqrt_floor(pop.n)
    args = pop.metric_args()
    codes = decision_codes(*args)
    scc = scc_mask(2, *args)
    type_i = np.isin(codes, [int(r) for r, v in VERDICT_OF.items() if v is Verdict.TYPE_I])
    type_ii = np.isin(codes, [int(r) for r, v in VERDICT_OF.items() if v is Verdict.TYPE_II])
    undecided = codes == int(Reason.NONE)
    ok = ~type_i | (_gamma(pop) <= bound)
    ok &= ~type_ii | (_gamma_bar(pop) <= bound)
    ok &= undecided == scc
    return ok


PREDICATES: dict[PredicateId, Predicate] = {
    p.id: p
    for p in [
        Predicate(
            PredicateId.ORE_HALF_N,
            lambda pop: _order_at_least(pop, 1) & ~pop.has_isolated,
            lambda pop: _gamma(pop) <= pop.n // 2,
            "gamma <= floor(n/2) on graphs without isolated vertices",
        ),
        Predicate(
            PredicateId.JAEGER_PRODUCT,
            lambda pop: _order_at_least(pop, 1),
            lambda pop: _gamma(pop) * _gamma_bar(pop) <= pop.n,
            "gamma(G) * gamma(complement) <= n",
        ),
        Predicate(
            PredicateId.OBSERVATION_EITHER_TYPE,
            lambda pop: _order_at_least(pop, 1),
            lambda pop: (_gamma(pop) <= isqrt_floor(pop.n)) | (_gamma_bar(pop) <= isqrt_floor(pop.n)),
            "gamma(G) <= floor(sqrt(n)) or gamma(complement) <= floor(sqrt(n))",
        ),
        Predicate(
            PredicateId.DEGREE_BOUNDS,
            lambda pop: _order_at_least(pop, 1),
            lambda pop: (-(-pop.n // (1 + pop.max_degree.astype(np.int64))) <= _gamma(pop))
            & (_gamma(pop) <= pop.n - pop.max_degree),
            "ceil(n/(1+Delta)) <= gamma <= n - Delta",
        ),
        Predicate(
            PredicateId.NECESSARY_DELTA,
            lambda pop: _order_at_least(pop, 2) & (_gamma(pop) <= isqrt_floor(pop.n)),
            lambda pop: pop.max_degree >= isqrt_ceil(pop.n) - 1,
            "gamma <= floor(sqrt(n)) implies Delta >= ceil(sqrt(n)) - 1 (n >= 2)",
        ),
        Predicate(
            PredicateId.BRIGHAM_DIAM,
            lambda pop: _order_at_least(pop, 1) & (_gamma_bar(pop) >= 3),
            lambda pop: pop.shape_g[0] & (pop.shape_g[2] <= 2),
            "gamma(complement) >= 3 implies G connected with diam(G) <= 2",
        ),
        Predicate(
            PredicateId.SUFFICIENT_CONDITIONS,
            lambda pop: _order_at_least(pop, 2) & (~pop.shape_gbar[0] | (pop.shape_gbar[2] >= 3)),
            lambda pop: _gamma(pop) <= isqrt_floor(pop.n),
            "complement disconnected or diam(complement) >= 3 implies gamma <= floor(sqrt(n))",
        ),
        Predicate(
            PredicateId.CHARACTERIZATION_EQUIV,
            lambda pop: _order_at_least(pop, 4) & pop.shape_g[0],
            _check_characterization,
            "connected, n >= 4: gamma = floor(sqrt(n)) graphs decompose with condition (C); "
            "other values fail the part-size bounds",
        ),
        Predicate(
            PredicateId.CLASSIFIER_SOUNDNESS,
            lambda pop: _order_at_least(pop, 2),
            _check_classifier,
            "fast verdicts imply the exact inequality; undecided iff SCC(2)",
        ),
        Predicate(
            PredicateId.SCC2_CONJECTURE,
            lambda pop: _order_at_least(pop, 1) & scc_mask(2, *pop.metric_args()),
            lambda pop: (_gamma(pop) <= isqrt_ceil(pop.n)) & (_gamma_bar(pop) <= isqrt_ceil(pop.n)),
            "SCC(2) graphs: gamma(G) and gamma(complement) <= ceil(sqrt(n)); open conjecture",
            gamma_everywhere=False,
            theorem=False,
        ),
    ]
}

ALL_PREDICATES = tuple(PREDICATES)


@dataclass
class PredicateResult:
    id: PredicateId
    tested: int = 0
    violations: int = 0
    witnesses: list[str] = field(default_factory=list)
    notes: str = ""

    def merge(self, other: PredicateResult, cap: int) -> None:
        self.tested += other.tested
        self.violations += other.violations
        self.witnesses = sorted(set(self.witnesses) | set(other.witnesses))[:cap]

    def to_dict(self) -> dict:
        return {
            "id": self.id.value,
            "tested": self.tested,
            "violations": self.violations,
            "witnesses": list(self.witnesses),
            "notes": self.notes,
        }


@dataclass
class ScanReport:
    population: dict
    predicates: list[PredicateResult]
    wall_ms: float = 0.0

    def result(self, pid: PredicateId | str) -> PredicateResult:
        pid = PredicateId(pid)
        for r in self.predicates:
            if r.id is pid:
                return r
        raise KeyError(pid)

    @property
    def theorem_violation(self) -> bool:
        return any(r.violations for r in self.predicates if PREDICATES[r.id].theorem)

    @property
    def conjecture_violation(self) -> bool:
        return any(r.violations for r in self.predicates if not PREDICATES[r.id].theorem)

    def to_dict(self, timing: bool = False) -> dict:
        out = {"population": self.population, "predicates": [r.to_dict() for r in self.predicates]}
        if timing:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        """Deterministic JSON; wall time is only included on request."""
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        """One row per predicate, witnesses joined with ';'."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "tested", "violations", "witnesses", "notes"])
        for r in self.predicates:
            writer.writerow([r.id.value, r.tested, r.violations, ";".join(r.witnesses), r.notes])
        return buf.getvalue()

    @classmethod
    def from_dict(cls, data: dict) -> ScanReport:
        results = [
            PredicateResult(PredicateId(p["id"]), p["tested"], p["violations"], list(p["witnesses"]), p["notes"])
            for p in data["predicates"]
        ]
        return cls(data["population"], results, data.get("wall_ms", 0.0))


def _normalise(predicates: Iterable[PredicateId | str] | None) -> list[PredicateId]:
    if predicates is None:
        return list(ALL_PREDICATES)
    chosen = {PredicateId(p) for p in predicates}
    return [p for p in ALL_PREDICATES if p in chosen]


def evaluate(pop: Population, predicates: Sequence[PredicateId],
             max_witnesses: int = DEFAULT_MAX_WITNESSES) -> list[PredicateResult]:
    out = []
    for pid in predicates:
        pred = PREDICATES[pid]
        index = np.flatnonzero(pred.hypothesis(pop))
        result = PredicateResult(pid, tested=int(index.size), notes=pred.notes)
        if index.size:
            ok = np.asarray(pred.check(pop.select(index)), dtype=bool)
            bad = index[~ok]
            result.violations = int(bad.size)
            result.witnesses = sorted(to_graph6_str(pop.graph(int(i))) for i in bad)[:max_witnesses]
        out.append(result)
    return out


def evaluate_graph(pid: PredicateId | str, g: Graph) -> bool | None:
    """Run one predicate on one graph: ``None`` outside its hypothesis, else pass/fail."""
    pid = PredicateId(pid)
    pop = Population.from_graphs(g.n, [g])
    pred = PREDICATES[pid]
    if not pred.hypothesis(pop)[0]:
        return None
    return bool(pred.check(pop)[0])


def _merge(parts: Iterable[list[PredicateResult]], predicates: Sequence[PredicateId], cap: int) -> list[PredicateResult]:
    total = [PredicateResult(pid, notes=PREDICATES[pid].notes) for pid in predicates]
    for part in parts:
        for acc, piece in zip(total, part):
            acc.merge(piece, cap)
    return total


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: explicit value, else ``DOMINA_THREADS``; 0 means one per CPU."""
    if workers is None:
        try:
            workers = int(os.environ.get("DOMINA_THREADS", "0"))
        except ValueError:
            workers = 0
    if workers <= 0:
        workers = os.cpu_count() or 1
    return workers


def _exhaustive_chunk(args: tuple) -> list[PredicateResult]:
    n, start, stop, predicates, cap = args
    pop = Population.from_masks(n, np.arange(start, stop, dtype=np.uint64))
    return evaluate(pop, predicates, cap)


def _sampled_chunk(args: tuple) -> list[PredicateResult]:
    n, p, seeds, predicates, cap = args
    pop = Population.from_graphs(n, [random_gnp(n, p, s) for s in seeds])
    return evaluate(pop, predicates, cap)


def _run(job: Callable, tasks: list[tuple], workers: int) -> list[list[PredicateResult]]:
    if workers <= 1 or len(tasks) <= 1:
        return [job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(job, tasks))


def scan_exhaustive(n: int, predicates: Iterable[PredicateId | str] | None = None, *,
                    chunk_size: int = DEFAULT_CHUNK, workers: int | None = None,
                    max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ScanReport:
    """Every labelled graph of order ``n``.

    Budget: ``n <= 7`` in general; ``n = 8`` only when no requested predicate
    needs an exact domination number of every graph.
    """
    chosen = _normalise(predicates)
    if n < 0:
        raise ValueError("order must be non-negative")
    heavy = any(PREDICATES[p].gamma_everywhere for p in chosen)
    limit = EXHAUSTIVE_MAX_ORDER if heavy else EXHAUSTIVE_LIGHT_MAX_ORDER
    if n > limit:
        raise ScanTooLarge(f"exhaustive scan of order {n} exceeds the budget (n <= {limit} for this predicate set)")
    started = time.perf_counter()
    total = 1 << (n * (n - 1) // 2)
    tasks = [(n, lo, min(lo + chunk_size, total), chosen, max_witnesses) for lo in range(0, total, chunk_size)]
    results = _merge(_run(_exhaustive_chunk, tasks, resolve_workers(workers)), chosen, max_witnesses)
    population = {"kind": "exhaustive", "n": n, "graphs": total}
    return ScanReport(population, results, (time.perf_counter() - started) * 1000)


def scan_sampled(n: int, p: float, trials: int, seed: int,
                 predicates: Iterable[PredicateId | str] | None = None, *,
                 chunk_size: int = 4096, workers: int | None = None,
                 max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ScanReport:
    """Independent G(n, p) draws; trial ``t`` uses the ``t``-th split of ``seed``.

    Budget: ``n <= 20`` when a predicate needs every domination number,
    otherwise ``n <= 62``.
    """
    chosen = _normalise(predicates)
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"p must lie in [0, 1], got {p}")
    if n < 0 or trials < 0:
        raise ValueError("order and trial count must be non-negative")
    heavy = any(PREDICATES[q].gamma_everywhere for q in chosen)
    limit = SAMPLED_MAX_ORDER if heavy else MAX_ORDER
    if n > limit:
        raise ScanTooLarge(f"sampled scan of order {n} exceeds the budget (n <= {limit} for this predicate set)")
    started = time.perf_counter()
    seeds = split_seeds(seed, trials)
    tasks = [(n, p, seeds[lo:lo + chunk_size], chosen, max_witnesses) for lo in range(0, trials, chunk_size)]
    results = _merge(_run(_sampled_chunk, tasks, resolve_workers(workers)), chosen, max_witnesses)
    population = {"kind": "sampled", "n": n, "p": p, "trials": trials, "seed": seed, "generator": "splitmix64"}
    return ScanReport(population, results, (time.perf_counter() - started) * 1000)


def conjecture_scan(lines: Iterable[bytes | str], source: str = "<stream>", *,
                    max_witnesses: int = DEFAULT_MAX_WITNESSES) -> ScanReport:
    """Check the SCC(2) conjecture on every graph of a graph6 stream.

    A malformed line raises :class:`~domina.errors.MalformedGraph6` carrying its
    line number before any result is produced.
    """
    started = time.perf_counter()
    by_order: dict[int, list[Graph]] = {}
    count = 0
    for _, g in iter_graph6(lines):
        by_order.setdefault(g.n, []).append(g)
        count += 1
    chosen = [PredicateId.SCC2_CONJECTURE]
    parts = [evaluate(Population.from_graphs(n, gs), chosen, max_witnesses) for n, gs in sorted(by_order.items())]
    results = _merge(parts, chosen, max_witnesses)
    population = {"kind": "stream", "source": source, "graphs": count}
    return ScanReport(population, results, (time.perf_counter() - started) * 1000)
