from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from chromsum.exact import max_independent_set
from chromsum.graph import (
    Graph,
    GraphError,
    KneserRangeError,
    circular_complete,
    complement,
    complete,
    cycle,
    empty,
    induced_delete,
    kneser,
    old_to_new,
    path,
    petersen,
    random_gnp,
)

from oracles import brute_alpha, brute_isomorphic


def assert_simple(g: Graph):
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert 2 * g.num_edges == sum(g.degrees())


def test_petersen_is_kneser_5_2():
    g = petersen()
    assert (g.n, g.num_edges) == (10, 15)
    assert set(g.degrees()) == {3}
    assert g == kneser(5, 2)


def test_kneser_2_1_is_single_edge():
    g = kneser(2, 1)
    assert g.n == 2 and list(g.edges()) == [(0, 1)]


def test_kneser_4_2_matching_matches_disjointness_scan():
    g = kneser(4, 2)
    subsets = list(combinations(range(1, 5), 2))
    assert list(g.labels) == subsets
    expected = {(i, j) for i, j in combinations(range(6), 2) if not set(subsets[i]) & set(subsets[j])}
    assert set(g.edges()) == expected
    assert len(expected) == 3 and set(g.degrees()) == {1}


@pytest.mark.parametrize("m,n", [(m, n) for n in (1, 2, 3) for m in range(2 * n, 9)])
def test_kneser_counts_and_regularity(m, n):
    g = kneser(m, n)
    assert g.n == comb(m, n)
    assert g.num_edges == comb(m, n) * comb(m - n, n) // 2
    assert set(g.degrees()) == {comb(m - n, n)}
    assert_simple(g)


@pytest.mark.parametrize("m,n", [(3, 2), (1, 1), (4, 0), (5, -1)])
def test_kneser_rejects_bad_parameters(m, n):
    with pytest.raises(KneserRangeError):
        kneser(m, n)


def test_circular_complete_small_cases():
    assert circular_complete(3, 1) == complete(3)
    g = circular_complete(8, 3)
    assert g.n == 8 and g.num_edges == 12 and set(g.degrees()) == {3}
    for i in range(8):
        assert set(g.neighbors(i)) == {(i + 3) % 8, (i + 4) % 8, (i + 5) % 8}
    assert brute_isomorphic(circular_complete(5, 2), cycle(5))
    with pytest.raises(GraphError):
        circular_complete(5, 3)


def test_basic_families():
    assert (complete(4).n, complete(4).num_edges) == (4, 6)
    assert (cycle(5).num_edges, path(4).num_edges) == (5, 3)
    assert empty(3).num_edges == 0
    assert complete(1).num_edges == 0
    for bad in (lambda: cycle(2), lambda: complete(0), lambda: path(0)):
        with pytest.raises(GraphError):
            bad()


def test_random_gnp_is_deterministic_and_validated():
    a = random_gnp(10, Fraction(1, 2), 12345)
    assert a == random_gnp(10, Fraction(1, 2), 12345)
    assert random_gnp(10, 0, 1).num_edges == 0
    assert random_gnp(10, 1, 1) == complete(10)
    assert_simple(a)
    with pytest.raises(GraphError):
        random_gnp(5, Fraction(3, 2), 0)


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_masks([0b10, 0b00])


def test_induced_delete():
    k3 = induced_delete(complete(4), {0})
    assert k3 == complete(3)
    assert k3.origin == (1, 2, 3)
    assert old_to_new(k3) == {1: 0, 2: 1, 3: 2}
    g = petersen()
    assert induced_delete(g, set()) == g


def test_petersen_minus_maximum_independent_set_is_a_matching():
    g = petersen()
    # every independent 4-set found by brute force leaves a perfect matching
    fours = [s for s in combinations(range(10), 4) if g.is_independent(s)]
    assert fours and brute_alpha(g) == 4
    for s in fours:
        rest = induced_delete(g, s)
        assert (rest.n, rest.num_edges) == (6, 3)
        assert set(rest.degrees()) == {1}
    assert tuple(sorted(max_independent_set(g))) in fours


def test_complement():
    g = kneser(4, 2)
    c = complement(g)
    subsets = g.labels
    for i, j in combinations(range(6), 2):
        assert c.has_edge(i, j) == bool(set(subsets[i]) & set(subsets[j]))
    assert set(c.degrees()) == {4}


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 12), p=st.fractions(0, 1, max_denominator=8), seed=st.integers(0, 2**64 - 1))
def test_random_graph_invariants(n, p, seed):
    g = random_gnp(n, p, seed)
    assert_simple(g)
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == comb(n, 2)
