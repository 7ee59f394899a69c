"""Exact domination numbers and their certificates.

Run with ``python3 demos/01_domination_numbers.py``.
"""

from domina import gamma, gamma_connected, gamma_total, greedy_dominating_set
from domina.domination import degree_bounds, private_neighbors
from domina.graph import cycle_graph, petersen_graph
from domina.generators import random_gnp

# The 5-cycle needs two vertices; every other vertex is adjacent to one of them.
c5 = cycle_graph(5)
for solve in (gamma, gamma_total, gamma_connected):
    cert = solve(c5)
    print(f"C5 {cert.variant.value:>9}: {cert.value} via {cert.witness.to_list()}")

# Any certificate can be re-verified independently of the solver.
cert = gamma(petersen_graph())
print("Petersen gamma:", cert.value, cert.witness.to_list(), "verified:", cert.verify(petersen_graph()))

# Each member of a minimum dominating set owns at least one private neighbour.
best = gamma(c5).witness
pn, epn = private_neighbors(c5, best, 0)
print("private neighbours of 0 w.r.t.", best.to_list(), "->", pn.to_list(), "external:", epn.to_list())

# On a random graph the exact value sits between the degree bounds, below greedy.
g = random_gnp(18, 0.25, seed=7)
bounds = degree_bounds(g)
exact = gamma(g).value
print(f"G(18, 0.25) seed 7: {bounds.lower} <= gamma = {exact} <= {bounds.upper}; greedy found {len(greedy_dominating_set(g))}")
