from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domina.classifier import (
    Reason,
    Verdict,
    classify_exact,
    classify_fast,
    decision_codes,
    is_scc,
    isqrt_ceil,
    isqrt_floor,
    nordhaus_gaddum_check,
)
from domina.errors import TooSmall
from domina.generators import enumerate_labeled
from domina.graph import complement, complete_graph, cycle_graph, empty_graph, from_edges, path_graph

from oracles import distances, gamma_oracle


def test_isqrt_examples():
    assert (isqrt_floor(9), isqrt_ceil(9)) == (3, 3)
    assert (isqrt_floor(8), isqrt_ceil(8)) == (2, 3)
    assert isqrt_floor(5) == 2
    assert (isqrt_floor(0), isqrt_ceil(0)) == (0, 0)


def test_isqrt_squares_dense():
    for k in range(1, 10**6 + 1, 997):
        assert isqrt_floor(k * k) == k
        assert isqrt_floor(k * k + 1) == k
        assert isqrt_ceil(k * k) == k


@given(st.integers(0, 10**40))
def test_isqrt_definition(n):
    r = isqrt_floor(n)
    assert r * r <= n < (r + 1) ** 2
    c = isqrt_ceil(n)
    assert (c - 1) ** 2 < n <= c * c or n == c == 0


def test_nordhaus_gaddum_examples(c5, p4):
    rec = nordhaus_gaddum_check(c5)
    assert (rec.gamma_g, rec.gamma_gbar, rec.n, rec.product_ok) == (2, 2, 5, True)
    assert gamma_oracle(complement(c5)) == 2
    rec = nordhaus_gaddum_check(complete_graph(5))
    assert (rec.gamma_g, rec.gamma_gbar, rec.n, rec.product_ok) == (1, 5, 5, True)
    assert sorted(complement(p4).edges()) == [(0, 2), (0, 3), (1, 3)]
    rec = nordhaus_gaddum_check(p4)
    assert (rec.gamma_g, rec.gamma_gbar, rec.product_ok) == (2, 2, True)


def test_is_scc_examples(c5, p4, k2):
    assert is_scc(c5, 2)
    assert not is_scc(p4, 2)
    assert not any(is_scc(k2, t) for t in range(1, 5))
    assert not is_scc(empty_graph(0), 0)


def test_classify_fast_examples(c5, p4):
    d = classify_fast(p4)
    assert (d.verdict, d.reason) == (Verdict.TYPE_II, Reason.DIAM_G_GE_3)
    d = classify_fast(empty_graph(5))
    assert (d.verdict, d.reason) == (Verdict.TYPE_II, Reason.G_DISCONNECTED)
    d = classify_fast(c5)
    assert (d.verdict, d.reason) == (Verdict.SCC2_UNDECIDED, Reason.NONE)
    assert d.to_dict() == {"verdict": "SCC2_UNDECIDED", "reason": "NONE"}
    with pytest.raises(TooSmall):
        classify_fast(from_edges(1, []))


def test_classify_fast_branch_order():
    # K4: complement disconnected fires before the radius-1 branch
    assert classify_fast(complete_graph(4)).reason is Reason.GBAR_DISCONNECTED
    # complement of P4 is P4 again: diam(G) >= 3 fires first
    assert classify_fast(complement(path_graph(4))).reason is Reason.DIAM_G_GE_3
    # star K_{1,3} plus an edge between leaves: G has radius 1; its complement is disconnected
    assert classify_fast(from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])).reason is Reason.GBAR_DISCONNECTED


def test_decision_codes_scalar_and_array_agree():
    args = ([True, True, False], [True, False, True], [2, 1, 0], [2, 2, 0], [2, 0, 0], [2, 0, 0])
    codes = decision_codes(*args)
    assert list(codes) == [Reason.NONE, Reason.GBAR_DISCONNECTED, Reason.G_DISCONNECTED]
    for i in range(3):
        assert int(decision_codes(*(a[i] for a in args))) == codes[i]


def test_classify_exact_examples(c5, p4):
    assert classify_exact(c5) == (True, True)
    assert classify_exact(empty_graph(9)) == (False, True)
    assert gamma_oracle(empty_graph(9)) == 9 and gamma_oracle(complete_graph(9)) == 1
    assert gamma_oracle(c5) == gamma_oracle(complement(c5)) == 2
    assert classify_exact(p4) == (True, True)


def _diameter_oracle(g):
    flat = [d for row in distances(g) for d in row]
    return max(flat)


def _radius_oracle(g):
    return min(max(row) for row in distances(g))


@pytest.mark.parametrize("n", range(2, 7))
def test_fast_path_sound_and_scc_exact(n):
    bound = math.isqrt(n)
    for g in enumerate_labeled(n):
        decision = classify_fast(g)
        gbar = complement(g)
        if decision.verdict is Verdict.TYPE_I:
            assert gamma_oracle(g) <= bound
        elif decision.verdict is Verdict.TYPE_II:
            assert gamma_oracle(gbar) <= bound
        scc = all(
            _radius_oracle(h) == _diameter_oracle(h) == 2 for h in (g, gbar)
        )
        assert (decision.verdict is Verdict.SCC2_UNDECIDED) == scc == is_scc(g, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_observation_and_product(n):
    for g in enumerate_labeled(n):
        exact = classify_exact(g)
        assert exact.type_i or exact.type_ii
        assert nordhaus_gaddum_check(g).product_ok


def test_necessary_delta_and_brigham_small():
    for n in range(2, 7):
        for g in enumerate_labeled(n):
            gam = gamma_oracle(g)
            if gam <= math.isqrt(n):
                assert g.max_degree >= isqrt_ceil(n) - 1
            if gamma_oracle(complement(g)) >= 3:
                assert _diameter_oracle(g) <= 2


def test_c5_is_sharp_for_the_degree_condition(c5):
    assert c5.max_degree == isqrt_ceil(5) - 1 == 2


def test_scc_count_n5_matches_labeled_cycles():
    cycles = set()
    for perm in itertools.permutations(range(5)):
        cycles.add(frozenset(frozenset((perm[i], perm[(i + 1) % 5])) for i in range(5)))
    assert len(cycles) == math.factorial(5) // 10 == 12
    found = {frozenset(frozenset(e) for e in g.edges()) for g in enumerate_labeled(5) if is_scc(g, 2)}
    assert found == cycles
    assert is_scc(cycle_graph(5), 2)
