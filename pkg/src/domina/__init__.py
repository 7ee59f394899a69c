"""Exact domination numbers, the square-root domination bound and its family
characterisation, a polynomial domination-type classifier, and sweeps that
test these results on small graphs."""

from .batch import Population
from .classifier import (
    ExactTypes,
    NGRecord,
    Reason,
    TypeDecision,
    Verdict,
    classify_exact,
    classify_fast,
    is_scc,
    isqrt_ceil,
    isqrt_floor,
    nordhaus_gaddum_check,
)
from .domination import (
    DegreeBounds,
    DominationCertificate,
    Variant,
    degree_bounds,
    gamma,
    gamma_connected,
    gamma_total,
    greedy_dominating_set,
    is_dominating,
    is_minimal_dominating,
    private_neighbors,
)
from .family import (
    FamilyDecomposition,
    boundary_sets,
    build_family_graph,
    check_condition_c,
    witness_dominating_set,
    extract_decomposition,
    is_in_family,
    restricted_subgraphs,
    validate_decomposition,
)
from .generators import enumerate_labeled, random_gnp
from .graph import (
    INFINITE,
    Graph,
    Metrics,
    VertexSet,
    complement,
    connected_components,
    from_edges,
    induced_subgraph,
    metrics,
)
from .graph6 import parse_graph6, to_graph6
from .harness import PredicateId, ScanReport, conjecture_scan, scan_exhaustive, scan_sampled

__version__ = "0.1.0"
