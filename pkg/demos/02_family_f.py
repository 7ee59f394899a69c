"""Building graphs with domination number floor(sqrt(n)) from two pieces.

A decomposition joins a small graph H1 (the would-be dominating set) to a
partitioned H2. Condition (C) decides whether the result really needs all of
H1; when it fails, the witness names a smaller dominating set.

Run with ``python3 demos/02_family_f.py``.
"""

from domina import gamma
from domina.family import (
    FamilyDecomposition,
    build_family_graph,
    check_condition_c,
    extract_decomposition,
    random_decomposition,
    witness_dominating_set,
)
from domina.graph import complete_graph, cycle_graph, from_edges
from domina.graph6 import to_graph6_str

k2 = complete_graph(2)

# H1 = K2, parts {a} and {b}, H2 edge ab: the composed graph is C4.
c4_dec = FamilyDecomposition.from_parts(k2, from_edges(2, [(0, 1)]), [[0], [1]])
g, labels = build_family_graph(c4_dec)
print("C4 decomposition builds", to_graph6_str(g), "edges", g.edges())
print("  condition (C):", check_condition_c(c4_dec).ok, " gamma =", gamma(g).value)

# A last-part vertex c adjacent to both H1 vertices and to a, b dominates everything.
bad = FamilyDecomposition.from_parts(k2, from_edges(3, [(0, 2), (2, 1)]), [[0], [1]], [2],
                                     v_last_cross={2: [0, 1]})
result = check_condition_c(bad)
print("counterexample: ok =", result.ok, "witness I =", result.witness[0], "S =", result.witness[1].to_list())
print("  smaller dominating set:", witness_dominating_set(bad, result.witness).to_list(),
      " gamma =", gamma(build_family_graph(bad)[0]).value)

# Going the other way: a minimum dominating set of C5 induces a decomposition.
c5 = cycle_graph(5)
dec = extract_decomposition(c5, gamma(c5).witness)
print("C5 from", gamma(c5).witness.to_list(), "->", dec.to_json())

# Random decompositions: condition (C) holds exactly when gamma stays at k.
agree = 0
for seed in range(200):
    d = random_decomposition(seed)
    built = build_family_graph(d)[0]
    agree += check_condition_c(d).ok == (gamma(built).value == d.k)
print(f"condition (C) matched gamma = k on {agree}/200 random decompositions")
