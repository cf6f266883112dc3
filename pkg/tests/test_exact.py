from math import comb

import networkx as nx
import pytest

from chromsum.budget import Budget, BudgetExhausted
from chromsum.exact import (
    chromatic_number,
    chromatic_sum_exact,
    clique_number,
    max_independent_set,
    strength,
)
from chromsum.graph import (
    Graph,
    circular_complete,
    complete,
    cycle,
    empty,
    kneser,
    path,
    petersen,
)

from oracles import (
    brute_alpha,
    brute_chi,
    brute_omega,
    random_corpus,
    sigma_by_partitions,
    sigma_by_product,
)


def test_petersen_sum_and_strength():
    res = chromatic_sum_exact(petersen())
    assert res.optimal
    assert (res.sigma, res.strength) == (19, 3)
    assert res.witness.sum == 19 and res.witness.num_colors == 3
    assert sigma_by_partitions(petersen()) == (19, 3)


def test_circular_8_3_sum():
    assert chromatic_sum_exact(circular_complete(8, 3)).sigma == 15


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graph_sum(n):
    res = chromatic_sum_exact(complete(n))
    assert res.sigma == n * (n + 1) // 2
    assert res.strength == n


def test_matching_kneser():
    assert chromatic_sum_exact(kneser(4, 2)).sigma == 9


def test_edgeless_and_empty():
    res = chromatic_sum_exact(empty(5))
    assert (res.sigma, res.strength) == (5, 1)
    res = chromatic_sum_exact(Graph(0))
    assert (res.sigma, res.strength, res.optimal) == (0, 0, True)


def test_path4():
    assert sigma_by_product(path(4)) == (6, 2)
    res = chromatic_sum_exact(path(4))
    assert res.sigma == 6
    # solver order is (1, 2, 0, 3); lexicographically least optimal vector there
    assert res.witness.colors == (2, 1, 2, 1)


def test_strength_values():
    assert strength(complete(5)) == 5
    assert strength(petersen()) == 3


def test_strength_above_chromatic_number_on_double_star():
    # two adjacent hubs with three leaves each: 2 colors cost 12, 3 colors cost 11
    g = Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    assert sigma_by_partitions(g) == (11, 3)
    res = chromatic_sum_exact(g)
    assert (res.sigma, res.strength) == (11, 3)
    assert chromatic_number(g) == 2


def test_budget_exhaustion_is_flagged():
    res = chromatic_sum_exact(kneser(6, 2), Budget(max_nodes=10))
    assert not res.optimal
    assert res.sigma >= 34
    with pytest.raises(BudgetExhausted):
        strength(kneser(6, 2), Budget(max_nodes=10))


def test_determinism():
    g = kneser(6, 2)
    assert chromatic_sum_exact(g).witness == chromatic_sum_exact(g).witness


@pytest.mark.parametrize("g", random_corpus(60, 6, seed0=500), ids=repr)
def test_sum_matches_product_enumeration(g):
    res = chromatic_sum_exact(g)
    assert (res.sigma, res.strength) == sigma_by_product(g)


@pytest.mark.parametrize("g", random_corpus(120, 8, seed0=1000), ids=repr)
def test_sum_properties_on_corpus(g):
    res = chromatic_sum_exact(g)
    assert (res.sigma, res.strength) == sigma_by_partitions(g)
    assert g.n <= res.sigma <= g.n + g.num_edges
    assert res.witness.is_locally_minimal()
    assert res.strength >= chromatic_number(g)


@pytest.mark.parametrize(
    "m,n,chi", [(4, 2, 2), (5, 2, 3), (6, 2, 4), (7, 2, 5), (7, 3, 3), (8, 3, 4)]
)
def test_lovasz_formula(m, n, chi):
    assert chi == m - 2 * n + 2
    assert chromatic_number(kneser(m, n)) == chi


def test_chromatic_number_basics():
    assert chromatic_number(empty(4)) == 1
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(complete(6)) == 6


@pytest.mark.parametrize("g", random_corpus(40, 7, seed0=77), ids=repr)
def test_chi_alpha_omega_against_brute_force(g):
    assert chromatic_number(g) == brute_chi(g)
    assert len(max_independent_set(g)) == brute_alpha(g)
    assert clique_number(g) == brute_omega(g)


def test_max_independent_set_lexicographically_least():
    g = cycle(6)
    assert max_independent_set(g) == frozenset({0, 2, 4})
    assert max_independent_set(complete(5)) == frozenset({0})
    assert len(max_independent_set(petersen())) == 4


@pytest.mark.parametrize("m,n", [(5, 2), (6, 2), (7, 3)])
def test_kneser_independence_numbers(m, n):
    s = max_independent_set(kneser(m, n))
    assert kneser(m, n).is_independent(s)
    assert len(s) == comb(m - 1, n - 1)


def test_independence_number_brute_force_on_kneser_6_2():
    assert brute_alpha(kneser(6, 2)) == 5


def test_clique_numbers():
    assert brute_omega(petersen()) == 2
    assert clique_number(petersen()) == 2
    assert clique_number(complete(7)) == 7
    assert clique_number(kneser(6, 2)) == 3


def test_alpha_against_networkx_on_kneser_7_3():
    g = kneser(7, 3)
    h = nx.Graph(list(g.edges()))
    comp = nx.complement(h)
    assert max(len(c) for c in nx.find_cliques(comp)) == len(max_independent_set(g))
