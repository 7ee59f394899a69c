"""Sweeping theorems and the SCC(2) conjecture over graph populations.

Exhaustive sweeps cover every labelled graph of an order; sampled sweeps draw
seeded G(n, p) graphs; stream scans read graph6 lines. Theorem predicates must
never fail; an SCC(2) failure would be a counterexample to an open problem.

Run with ``python3 demos/04_conjecture_scan.py``.
"""

from domina.generators import random_gnp
from domina.graph import cycle_graph, path_graph
from domina.graph6 import to_graph6_str
from domina.harness import conjecture_scan, scan_exhaustive, scan_sampled

report = scan_exhaustive(6)
for r in report.predicates:
    print(f"n=6 {r.id.value:<24} tested {r.tested:>6}  violations {r.violations}")

scc = scan_exhaustive(5, ["SCC2_CONJECTURE"]).result("SCC2_CONJECTURE")
print("SCC(2) graphs on 5 labelled vertices:", scc.tested, "(the 5!/10 labelled 5-cycles)")

sampled = scan_sampled(14, 0.5, 500, seed=99, predicates=["SCC2_CONJECTURE", "JAEGER_PRODUCT"])
print(sampled.to_json())

lines = [to_graph6_str(cycle_graph(5)), to_graph6_str(path_graph(4)), to_graph6_str(random_gnp(9, 0.5, 3))]
stream = conjecture_scan(lines, source="demo")
print("stream:", stream.population, "tested", stream.result("SCC2_CONJECTURE").tested)
