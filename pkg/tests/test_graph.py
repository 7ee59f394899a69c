from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domina.errors import InvalidVertex, LoopRejected
from domina.generators import enumerate_labeled, graph_from_mask, random_gnp
from domina.graph import (
    INFINITE,
    Graph,
    VertexSet,
    complement,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    from_edges,
    induced_subgraph,
    is_connected,
    metrics,
    path_graph,
)

from oracles import distances, is_connected_oracle


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return graph_from_mask(n, mask)


def assert_simple(g: Graph):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        assert g.rows[v] >> g.n == 0
        for u in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)


def test_from_edges_c5():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert g.degrees == [2] * 5
    assert g.m == 5
    assert_simple(g)


def test_from_edges_k1_and_duplicates():
    k1 = from_edges(1, [])
    assert k1.n == 1 and k1.m == 0
    assert from_edges(4, [(0, 1), (0, 1), (1, 2)]).m == 2
    assert from_edges(4, [(0, 1), (1, 0)]).m == 1


def test_from_edges_errors():
    with pytest.raises(InvalidVertex):
        from_edges(3, [(0, 3)])
    with pytest.raises(LoopRejected):
        from_edges(3, [(1, 1)])


def test_graph_constructor_rejects_bad_rows():
    with pytest.raises(LoopRejected):
        Graph(2, [0b01, 0])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(InvalidVertex):
        Graph(1, [0b10])


def test_complement_examples():
    assert complement(complete_graph(4)).m == 0
    c5bar = complement(cycle_graph(5))
    assert c5bar.degrees == [2] * 5
    # walk the complement from 0: each vertex has two neighbours, the walk closes after 5 steps
    walk, prev = [0], None
    while len(walk) < 6:
        here = walk[-1]
        nxt = [u for u in range(5) if c5bar.has_edge(here, u) and u != prev]
        prev = here
        walk.append(nxt[0])
    assert walk[-1] == 0 and len(set(walk[:5])) == 5
    assert complement(cycle_graph(4)).edges() == [(0, 2), (1, 3)]


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert_simple(complement(g))


def test_metrics_examples(c5, p4):
    m = metrics(c5)
    assert m.ecc == (2,) * 5 and m.radius == m.diameter == 2
    k1 = metrics(from_edges(1, []))
    assert k1.ecc == (0,) and k1.radius == k1.diameter == 0
    m = metrics(p4)
    assert m.ecc == (3, 2, 2, 3) and m.radius == 2 and m.diameter == 3


def test_metrics_disconnected_is_infinite():
    m = metrics(empty_graph(3))
    assert m.ecc == (INFINITE,) * 3 and m.radius is INFINITE and m.diameter is INFINITE
    assert not m.connected
    with pytest.raises(TypeError):
        _ = m.diameter >= 3


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_metrics_match_all_pairs_bfs(g):
    if g.n == 0:
        return
    dist = distances(g)
    m = metrics(g)
    if any(d == float("inf") for row in dist for d in row):
        assert m.diameter is INFINITE
        return
    ecc = tuple(int(max(row)) for row in dist)
    assert m.ecc == ecc
    assert m.radius == min(ecc) and m.diameter == max(ecc)
    assert m.radius <= m.diameter <= 2 * m.radius
    assert (m.diameter >= 3) == any(d >= 3 for row in dist for d in row)


def test_connected_components_examples(c5):
    assert [len(c) for c in connected_components(c5)] == [5]
    comps = connected_components(complement(cycle_graph(4)))
    assert [c.to_list() for c in comps] == [[0, 2], [1, 3]]
    assert [c.to_list() for c in connected_components(empty_graph(3))] == [[0], [1], [2]]


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    seen = 0
    for c in comps:
        assert seen & c.bits == 0
        seen |= c.bits
        sub, _ = induced_subgraph(g, c)
        assert is_connected(sub)
    assert seen == g.full_mask
    assert [min(c) for c in comps] == sorted(min(c) for c in comps)
    assert is_connected(g) == is_connected_oracle(g)


def test_induced_subgraph_examples(c5):
    sub, mapping = induced_subgraph(c5, VertexSet.of([1, 2, 3], 5))
    assert sub == path_graph(3)
    assert mapping == {1: 0, 2: 1, 3: 2}
    empty, mapping = induced_subgraph(c5, VertexSet.empty(5))
    assert empty.n == 0 and mapping == {}
    for pair in itertools.combinations(range(4), 2):
        assert induced_subgraph(complete_graph(4), pair)[0] == complete_graph(2)


@given(graphs(), st.data())
def test_induced_subgraph_edges(g, data):
    members = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    sub, mapping = induced_subgraph(g, members)
    assert sub.n == len(members)
    for a, b in itertools.combinations(sorted(members), 2):
        assert sub.has_edge(mapping[a], mapping[b]) == g.has_edge(a, b)


def test_vertex_set_basics():
    s = VertexSet.of([3, 0, 3], 5)
    assert len(s) == 2 and list(s) == [0, 3] and 3 in s and 4 not in s
    assert (s | VertexSet.of([1], 5)).to_list() == [0, 1, 3]
    assert s.complement().to_list() == [1, 2, 4]
    with pytest.raises(InvalidVertex):
        VertexSet.of([5], 5)
    with pytest.raises(InvalidVertex):
        VertexSet(1 << 5, 5)


def test_random_gnp_and_enumeration_produce_simple_graphs():
    for seed in range(20):
        assert_simple(random_gnp(9, 0.4, seed))
    for g in enumerate_labeled(4):
        assert_simple(g)
