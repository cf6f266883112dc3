from fractions import Fraction
from math import comb

import pytest

from chromsum.bounds import (
    BoundOptions,
    bounds_report,
    ceil_sqrt,
    greedy_sum_coloring,
    kneser_star_peel,
    kneser_upper_formula,
    maximal_independent_set_greedy,
    mis_peeling,
)
from chromsum.exact import chromatic_sum_exact
from chromsum.graph import KneserRangeError, circular_complete, complete, empty, kneser, petersen

from oracles import brute_alpha, random_corpus


def test_greedy_examples():
    assert greedy_sum_coloring(empty(6)).sum == 6
    assert greedy_sum_coloring(complete(5), [4, 2, 0, 1, 3]).sum == 15
    # first-fit in lexicographic subset order, computed independently
    g = greedy_sum_coloring(petersen())
    assert g.colors == (1, 1, 1, 1, 2, 2, 2, 3, 3, 3)
    assert g.sum == 19 <= 25


def test_greedy_rejects_non_permutation():
    with pytest.raises(ValueError):
        greedy_sum_coloring(complete(3), [0, 0, 1])


@pytest.mark.parametrize("g", random_corpus(80, 12, seed0=3), ids=repr)
def test_greedy_within_n_plus_e(g):
    assert greedy_sum_coloring(g).sum <= g.n + g.num_edges


def test_mis_peeling_examples():
    p = mis_peeling(petersen())
    assert p.sum == 19 and [len(c) for c in p.classes()] == [4, 3, 3]
    assert mis_peeling(complete(6)).sum == 21
    c = mis_peeling(circular_complete(8, 3))
    assert c.sum == 15 and [len(k) for k in c.classes()] == [3, 3, 2]


@pytest.mark.parametrize("g", random_corpus(60, 8, seed0=40), ids=repr)
def test_mis_peeling_is_proper_upper_bound(g):
    sigma = chromatic_sum_exact(g).sigma
    assert mis_peeling(g).sum >= sigma
    assert mis_peeling(g, exact=False).sum >= sigma


def test_greedy_maximal_set_is_maximal():
    g = kneser(6, 2)
    s = maximal_independent_set_greedy(g)
    assert g.is_independent(s)
    assert all(v in s or any(g.has_edge(v, u) for u in s) for v in range(g.n))


def test_star_peel_examples():
    p = kneser_star_peel(5, 2)
    assert p.sum == 19 == comb(6, 3) - 1
    for n in (1, 2, 3):
        c = kneser_star_peel(2 * n, n)
        assert set(c.colors) == {1, 2}
        assert 2 * c.sum == 3 * comb(2 * n, n)
    for m in range(2, 9):
        c = kneser_star_peel(m, 1)
        assert sorted(c.colors) == list(range(1, m + 1))


@pytest.mark.parametrize("m,n", [(m, n) for n in (1, 2, 3) for m in range(2 * n, 9)])
def test_star_peel_equals_closed_form(m, n):
    # telescoped sum of peeled star sizes plus the matching base, evaluated directly
    direct = sum(comb(m - i, n) for i in range(m - 2 * n)) + Fraction(3, 2) * comb(2 * n, n)
    assert kneser_upper_formula(m, n) == direct
    assert kneser_star_peel(m, n).sum == kneser_upper_formula(m, n)


def test_upper_formula_values():
    assert kneser_upper_formula(5, 2) == 19
    assert kneser_upper_formula(6, 2) == 34
    for m in range(2, 9):
        assert kneser_upper_formula(m, 1) == m * (m + 1) // 2
    with pytest.raises(KneserRangeError):
        kneser_upper_formula(5, 3)
    with pytest.raises(KneserRangeError):
        kneser_star_peel(3, 2)


def test_ceil_sqrt():
    assert [ceil_sqrt(x) for x in (0, 1, 2, 4, 80, 120, 121)] == [0, 1, 2, 2, 9, 11, 11]


def _by_name(entries):
    return {b.name: b for b in entries}


def test_petersen_report():
    rep = bounds_report(petersen(), BoundOptions(chi=True, chif=True, sigma=True))
    lo, up = _by_name(rep.lower_bounds), _by_name(rep.upper_bounds)
    assert lo["sqrt8e"].value == 11
    assert lo["clique-transitive"].value == 15
    assert up["greedy-edges"].value == 25
    assert up["edges"].value == 24
    assert up["chi"].value == 20
    assert up["chif"].value == 25 and up["chif"].strict
    assert rep.sigma == 19
    assert rep.is_consistent()


def test_complete_report():
    rep = bounds_report(complete(5), BoundOptions(chif=True, sigma=True))
    up = _by_name(rep.upper_bounds)
    assert up["chif"].value == 25 and rep.sigma == 15 < 25
    assert _by_name(rep.lower_bounds)["sqrt8e"].value == 9


def test_edgeless_report():
    rep = bounds_report(empty(4), BoundOptions(sigma=True))
    assert rep.best_lower() == 4 == rep.sigma


def test_clique_lower_bound_only_for_transitive_graphs():
    from chromsum.graph import path

    rep = bounds_report(path(4))
    assert "clique-transitive" not in _by_name(rep.lower_bounds)
    assert rep.vertex_transitive is False


def test_budget_failures_become_notes():
    from chromsum.budget import Budget

    rep = bounds_report(kneser(6, 2), BoundOptions(chi=True, chif=True, budget=Budget(max_nodes=3)))
    assert rep.notes
    assert rep.is_consistent()


@pytest.mark.parametrize("g", random_corpus(50, 8, seed0=900), ids=repr)
def test_report_consistency_on_corpus(g):
    rep = bounds_report(g, BoundOptions(chi=True, chif=True, sigma=True))
    assert rep.violations() == []
    assert rep.alpha == brute_alpha(g)
