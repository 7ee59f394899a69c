"""Deciding domination type without computing domination numbers.

Type-I means gamma(G) <= floor(sqrt(n)); type-II means the same for the
complement. Distances alone settle every graph except those where both G and
its complement have radius = diameter = 2.

Run with ``python3 demos/03_classifier.py``.
"""

from collections import Counter

from domina.classifier import classify_exact, classify_fast, nordhaus_gaddum_check
from domina.generators import enumerate_labeled
from domina.graph import cycle_graph, empty_graph, path_graph, petersen_graph

for name, g in [("P4", path_graph(4)), ("empty 5", empty_graph(5)), ("C5", cycle_graph(5)),
                ("Petersen", petersen_graph())]:
    fast = classify_fast(g)
    exact = classify_exact(g)
    rec = nordhaus_gaddum_check(g)
    print(f"{name:>9}: fast {fast.verdict.name}/{fast.reason.name:<18} "
          f"exact type_i={exact.type_i} type_ii={exact.type_ii} "
          f"gamma={rec.gamma_g} gamma_bar={rec.gamma_gbar}")

# How often does the fast path give up? Only on the SCC(2) graphs.
tally = Counter(classify_fast(g).reason.name for g in enumerate_labeled(6))
print("labelled graphs on 6 vertices by deciding branch:", dict(sorted(tally.items())))
