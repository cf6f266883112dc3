"""Fractional chromatic number as an exact covering LP over maximal independent sets."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .budget import Budget, BudgetExhausted, Meter
from .exact import chromatic_sum_exact, max_independent_set
from .graph import Graph, iter_bits
from .homomorphism import is_vertex_transitive
from .lp import LE, LinearProgram, lp_solve_exact

# above this many maximal sets the LP is solved by column generation
FULL_LP_COLUMNS = 200
_COLUMNS_PER_ROUND = 8


class InternalCheckError(AssertionError):
    """Two independent computations that must agree did not."""


def maximal_independent_sets(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    """All inclusion-maximal independent sets, sorted.

    Bron-Kerbosch with Tomita pivoting run on the complement (maximal
    cliques of the complement). Raises ``BudgetExhausted`` rather than
    return a partial list.
    """
    n = g.n
    full = (1 << n) - 1
    non = [full & ~a & ~(1 << v) for v, a in enumerate(g.masks)]
    meter = Meter(budget)
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        meter.tick()
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: (p & non[u]).bit_count())
        for v in iter_bits(p & ~non[pivot]):
            bit = 1 << v
            expand(r | bit, p & non[v], x & non[v])
            p &= ~bit
            x |= bit

    if n:
        expand(0, full, 0)
    return sorted((frozenset(iter_bits(s)) for s in out), key=lambda s: sorted(s))


def chif_program(g: Graph, sets: list[frozenset[int]]) -> LinearProgram:
    """min sum(w_S) s.t. every vertex is covered with total weight >= 1."""
    A = [[1 if v in s else 0 for s in sets] for v in range(g.n)]
    return LinearProgram(A=A, b=[1] * g.n, c=[1] * len(sets))


def _solve_covering(g: Graph, sets: list[frozenset[int]]) -> tuple[Fraction, list[Fraction]]:
    """Optimum and weights of the covering LP over ``sets``.

    Small instances go straight to the simplex. Larger ones keep a working
    subset of columns: solve the dual of the restricted LP, price every set
    against the dual vertex weights, add the sets weighing more than 1, and
    stop once none does. The dual solution is then feasible for the full LP,
    so the restricted optimum is the full optimum.
    """
    if len(sets) <= FULL_LP_COLUMNS:
        sol = lp_solve_exact(chif_program(g, sets))
        return sol.value, list(sol.x)
    chosen: list[int] = []
    for v in range(g.n):
        if not any(v in sets[i] for i in chosen):
            chosen.append(next(i for i, s in enumerate(sets) if v in s))
    while True:
        dual = lp_solve_exact(LinearProgram(
            A=[[1 if v in sets[i] else 0 for v in range(g.n)] for i in chosen],
            b=[1] * len(chosen),
            c=[1] * g.n,
            senses=[LE] * len(chosen),
            minimize=False,
        ))
        y = dual.x
        priced = sorted(
            ((sum(y[v] for v in s), -i) for i, s in enumerate(sets)),
            reverse=True,
        )
        fresh = [-i for w, i in priced[:_COLUMNS_PER_ROUND] if w > 1]
        if not fresh:
            break
        chosen.extend(fresh)
    # complementary slackness: some optimal weighting uses only tight sets
    chosen = [i for i in chosen if sum(y[v] for v in sets[i]) == 1]
    sol = lp_solve_exact(chif_program(g, [sets[i] for i in chosen]))
    if sol.value != dual.value:
        raise InternalCheckError(f"restricted primal {sol.value} != dual {dual.value}")
    x = [Fraction(0)] * len(sets)
    for i, w in zip(chosen, sol.x):
        x[i] = w
    return sol.value, x


@dataclass(frozen=True)
class ChiFResult:
    value: Fraction
    # weight per maximal independent set (nonzero entries only); None for the
    # vertex-transitive shortcut, which does not build a fractional coloring
    certificate: dict[frozenset[int], Fraction] | None
    method: str  # "lp" or "vertex-transitive"

    def coverage(self, g: Graph) -> list[Fraction]:
        cover = [Fraction(0)] * g.n
        for s, w in (self.certificate or {}).items():
            for v in s:
                cover[v] += w
        return cover


def fractional_chromatic_number(
    g: Graph,
    method: str = "lp",
    cross_check: bool = False,
    budget: Budget | None = None,
) -> ChiFResult:
    """Exact fractional chromatic number.

    ``method="lp"`` solves the covering LP and returns the optimal weights.
    ``method="vertex-transitive"`` returns ``n / alpha`` and requires ``g`` to
    be vertex-transitive. With ``cross_check`` the LP value is compared to
    ``n / alpha`` whenever ``g`` is vertex-transitive.
    """
    if g.n == 0:
        return ChiFResult(Fraction(0), {}, method)
    if method == "vertex-transitive":
        if not is_vertex_transitive(g, budget):
            raise ValueError("the n/alpha shortcut needs a vertex-transitive graph")
        return ChiFResult(Fraction(g.n, len(max_independent_set(g, budget))), None, method)
    if method != "lp":
        raise ValueError(f"unknown method {method!r}")
    sets = maximal_independent_sets(g, budget)
    value, x = _solve_covering(g, sets)
    cert = {s: w for s, w in zip(sets, x) if w}
    res = ChiFResult(value, cert, "lp")
    if cross_check and is_vertex_transitive(g, budget):
        expected = Fraction(g.n, len(max_independent_set(g, budget)))
        if expected != res.value:
            raise InternalCheckError(f"LP gives {res.value} but n/alpha = {expected}")
    return res


def kneser_ratio(g: Graph, budget: Budget | None = None) -> Fraction:
    """Least m/n with a homomorphism from ``g`` into KG(m, n), m >= 2n.

    Equal to the LP value whenever ``g`` has an edge. An edgeless graph maps
    into KG(2, 1) but into no Kneser graph of smaller ratio, so the answer
    is 2 there, while the LP gives 1.
    """
    if g.n == 0:
        return Fraction(0)
    if g.num_edges == 0:
        return Fraction(2)
    return fractional_chromatic_number(g, budget=budget).value


class Theorem2Check(NamedTuple):
    sigma: int
    chif_times_n: Fraction
    strict_ok: bool


def theorem2_check(g: Graph, budget: Budget | None = None) -> Theorem2Check:
    """Compare the chromatic sum with chi_f * n; the sum is always strictly smaller.

    chi_f here is :func:`kneser_ratio`, the Kneser-homomorphism form, which
    differs from the LP value only on edgeless graphs.
    """
    res = chromatic_sum_exact(g, budget)
    if not res.optimal:
        raise BudgetExhausted("chromatic sum search did not finish", res.nodes)
    bound = kneser_ratio(g, budget) * g.n
    return Theorem2Check(res.sigma, bound, res.sigma < bound)
