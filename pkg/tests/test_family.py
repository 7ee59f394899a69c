from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domina.domination import gamma, is_dominating
from domina.errors import (
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
from domina.family import (
    FamilyDecomposition,
    boundary_sets,
    build_family_graph,
    check_condition_c,
    extract_decomposition,
    is_in_family,
    random_decomposition,
    restricted_subgraphs,
    validate_decomposition,
    witness_dominating_set,
)
from domina.graph import VertexSet, complete_graph, cycle_graph, empty_graph, from_edges, path_graph, star_graph

from oracles import gamma_oracle

K2 = complete_graph(2)


def c4_decomposition():
    # H2 vertices: a = 0, b = 1
    return FamilyDecomposition.from_parts(K2, from_edges(2, [(0, 1)]), [[0], [1]])


def p4_decomposition():
    return FamilyDecomposition.from_parts(K2, empty_graph(2), [[0], [1]])


def counterexample_decomposition():
    # a = 0, b = 1, c = 2; c crosses to both H1 vertices; H2 edges ac, cb
    return FamilyDecomposition.from_parts(
        K2, from_edges(3, [(0, 2), (2, 1)]), [[0], [1]], [2], v_last_cross={2: [0, 1]}
    )


def test_build_c4():
    g, labels = build_family_graph(c4_decomposition())
    assert g == from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert g.degrees == [2, 2, 2, 2]
    assert labels == (("h1", 0), ("h1", 1), ("h2", 0), ("h2", 1))


def test_build_p4():
    g, _ = build_family_graph(p4_decomposition())
    # a - v1 - v2 - b
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 3)]
    assert sorted(g.degrees) == [1, 1, 2, 2]


def test_structural_errors():
    with pytest.raises(EmptyPartForNonIsolated):
        build_family_graph(FamilyDecomposition.from_parts(K2, empty_graph(2), [[], [0, 1]]))
    with pytest.raises(PartitionInvalid):
        validate_decomposition(FamilyDecomposition.from_parts(K2, empty_graph(2), [[0], [0, 1]]))
    with pytest.raises(PartitionInvalid):
        validate_decomposition(FamilyDecomposition.from_parts(K2, empty_graph(3), [[0], [1]]))
    with pytest.raises(SizeBoundViolated):
        validate_decomposition(FamilyDecomposition.from_parts(K2, empty_graph(7), [[0, 1, 2], [3, 4, 5, 6]]))
    with pytest.raises(CrossEdgeViolation):
        validate_decomposition(
            FamilyDecomposition.from_parts(K2, empty_graph(2), [[0], [1]], cross=[(0, 0), (0, 1), (1, 1)])
        )
    with pytest.raises(VLastUnderConnected):
        validate_decomposition(
            FamilyDecomposition.from_parts(K2, empty_graph(3), [[0], [1]], [2], v_last_cross={2: [0]})
        )


def test_isolated_h1_vertex_may_have_empty_part():
    d = FamilyDecomposition.from_parts(empty_graph(2), from_edges(2, [(0, 1)]), [[], []], [0, 1],
                                       v_last_cross={0: [0, 1], 1: [0, 1]})
    validate_decomposition(d)
    assert build_family_graph(d)[0].n == 4


def test_restricted_subgraphs_examples():
    d = c4_decomposition()
    h1_i, h2_i, (map1, map2) = restricted_subgraphs(d, [0])
    assert (h1_i.n, h2_i.n) == (1, 1) and map2 == {0: 0}
    h1_i, h2_i, _ = restricted_subgraphs(d, [0, 1])
    assert h2_i == d.h2 and h1_i == d.h1
    h1_i, h2_i, _ = restricted_subgraphs(d, [])
    assert (h1_i.n, h2_i.n) == (0, 0)


def test_restricted_subgraph_keeps_last_part_inside_i():
    d = counterexample_decomposition()
    assert restricted_subgraphs(d, [0])[1].n == 1
    assert restricted_subgraphs(d, [0, 1])[1].n == 3


def test_boundary_sets_examples():
    d = c4_decomposition()
    nh1, comp = boundary_sets(d, VertexSet.of([0], 2), [0, 1])
    assert nh1.to_list() == [0] and comp.to_list() == []
    nh1, _ = boundary_sets(d, VertexSet.empty(2), [0])
    assert nh1.to_list() == []
    for edges, expect in (([(0, 1), (1, 2)], [0]), ([(1, 2)], [])):
        h1 = from_edges(3, edges)
        d3 = FamilyDecomposition.from_parts(h1, empty_graph(6), [[0, 1], [2, 3], [4, 5]])
        assert boundary_sets(d3, [], [0])[1].to_list() == expect


def test_condition_c_examples():
    assert check_condition_c(c4_decomposition()) == (True, None)
    assert check_condition_c(p4_decomposition()) == (True, None)
    d = counterexample_decomposition()
    result = check_condition_c(d)
    assert not result.ok
    i_set, s = result.witness
    assert i_set == (0, 1) and s.to_list() == [2]
    g, _ = build_family_graph(d)
    assert gamma(g).value == gamma_oracle(g) == 1
    assert check_condition_c(d, literal=True) == result


def test_witness_reproduces_violation():
    d = counterexample_decomposition()
    i_set, s = check_condition_c(d).witness
    nh1, comp = boundary_sets(d, s, i_set)
    _, h2_i, (_, map2) = restricted_subgraphs(d, i_set)
    sub = VertexSet.of([map2[w] for w in s if w in map2], h2_i.n)
    assert is_dominating(h2_i, sub)
    assert len(s) <= len(i_set) - 1
    assert len(nh1 | comp) > len(i_set) - 1


def test_problem_too_large():
    d = random_decomposition(3, (4, 4))
    with pytest.raises(ProblemTooLarge):
        check_condition_c(d, max_order=d.order - 1)


def test_literal_reading_misses_last_part_dominators():
    # v_last vertex w10 crosses out of I yet dominates into H2^I, so the
    # literal condition passes while the built graph has gamma < k
    d = random_decomposition(280)
    g, _ = build_family_graph(d)
    assert check_condition_c(d, literal=True).ok
    assert gamma(g).value == d.k - 1
    result = check_condition_c(d)
    assert not result.ok
    assert len(witness_dominating_set(d, result.witness)) <= d.k - 1


@pytest.mark.parametrize("seed", range(150))
def test_condition_c_decides_gamma(seed):
    d = random_decomposition(seed)
    g, _ = build_family_graph(d)
    value = gamma(g).value
    assert d.k == math.isqrt(g.n) and g.n == d.order
    result = check_condition_c(d)
    if result.ok:
        assert value == d.k
    else:
        cert = witness_dominating_set(d, result.witness)
        assert is_dominating(g, cert) and len(cert) <= d.k - 1
        assert value <= d.k - 1


def test_extract_examples(c5, p4):
    c4 = cycle_graph(4)
    d = extract_decomposition(c4, [0, 1])
    # vertices outside {0, 1}: 2 -> 0, 3 -> 1; epn[0] = {3}, epn[1] = {2}
    assert [p.to_list() for p in d.parts] == [[1], [0]] and d.v_last.to_list() == []
    assert build_family_graph(d)[0].n == 4
    d = extract_decomposition(p4, [1, 2])
    assert [p.to_list() for p in d.parts] == [[0], [1]] and d.h2.m == 0
    assert d.to_dict() == {**p4_decomposition().to_dict()}
    d = extract_decomposition(c5, [0, 2])
    # outside = [1, 3, 4]: V1 = epn[0] = {4}, V2 = epn[2] = {3}, v_last = {1}
    assert [p.to_list() for p in d.parts] == [[2], [1]]
    assert d.v_last.to_list() == [0]
    assert check_condition_c(d).ok


def test_extract_errors(c5):
    with pytest.raises(GraphTooSmall):
        extract_decomposition(path_graph(3), [1])
    with pytest.raises(Disconnected):
        extract_decomposition(from_edges(4, [(0, 1), (2, 3)]), [0, 2])
    with pytest.raises(NotGammaSet):
        extract_decomposition(c5, [0, 1])
    with pytest.raises(WrongCardinality):
        extract_decomposition(c5, [0, 1, 3])
    # {0, 1} dominates K_{1,3} but the centre alone already does
    with pytest.raises(NotGammaSet):
        extract_decomposition(star_graph(3), [0, 1])


def test_is_in_family_examples(c5):
    assert is_in_family(cycle_graph(4))
    assert not is_in_family(star_graph(3))
    assert is_in_family(c5)
    with pytest.raises(Disconnected):
        is_in_family(empty_graph(4))
    with pytest.raises(GraphTooSmall):
        is_in_family(path_graph(3))


def test_round_trip_on_fixtures():
    for d in (c4_decomposition(), p4_decomposition()):
        g, _ = build_family_graph(d)
        back = extract_decomposition(g, range(d.k))
        assert back.parts == d.parts and back.v_last == d.v_last
        assert back.h1 == d.h1 and back.h2 == d.h2 and back.cross == d.cross


def test_json_round_trip():
    for d in (c4_decomposition(), counterexample_decomposition(), random_decomposition(7)):
        text = d.to_json()
        assert FamilyDecomposition.from_json(text) == d
        assert FamilyDecomposition.from_json(text).to_json() == text
    doc = counterexample_decomposition().to_dict()
    assert doc["cross"] == [[0, 0], [1, 1], [2, 0], [2, 1]]
    assert doc["parts"] == [[0], [1]] and doc["k"] == 2
    with pytest.raises(PartitionInvalid):
        FamilyDecomposition.from_dict({**doc, "k": 3})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_generated_decompositions_are_valid(seed):
    d = random_decomposition(seed)
    validate_decomposition(d)
    g, _ = build_family_graph(d)
    assert g.n == d.k + d.h2.n
    assert math.isqrt(g.n) == d.k
    assert is_dominating(g, VertexSet((1 << d.k) - 1, g.n))


@pytest.mark.parametrize("n", range(4, 7))
def test_converse_direction_small(n):
    from domina.generators import enumerate_labeled
    from domina.graph import is_connected

    k = math.isqrt(n)
    for g in enumerate_labeled(n):
        if not is_connected(g):
            continue
        cert = gamma(g)
        if cert.value != k:
            continue
        d = extract_decomposition(g, cert.witness, gamma_value=cert.value)
        validate_decomposition(d)
        assert check_condition_c(d).ok
