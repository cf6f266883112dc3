"""Polynomial-time sum colorings and the lower/upper bound chain on the chromatic sum."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .budget import Budget, BudgetExhausted
from .coloring import Coloring, greedy_sum_coloring
from .exact import (
    chromatic_number,
    chromatic_sum_exact,
    clique_number,
    max_independent_set,
    solver_order,
)
from .graph import Graph, KneserRangeError, components, induced_delete, kneser

__all__ = [
    "BoundEntry",
    "BoundsReport",
    "bounds_report",
    "ceil_sqrt",
    "greedy_sum_coloring",
    "kneser_star_peel",
    "kneser_upper_formula",
    "maximal_independent_set_greedy",
    "mis_peeling",
]


def ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


def maximal_independent_set_greedy(g: Graph) -> frozenset[int]:
    """Inclusion-maximal independent set: repeatedly take a minimum-degree vertex."""
    alive = set(range(g.n))
    chosen = []
    while alive:
        v = min(alive, key=lambda u: (sum(1 for w in g.neighbors(u) if w in alive), u))
        chosen.append(v)
        alive.discard(v)
        alive.difference_update(g.neighbors(v))
    return frozenset(chosen)


def mis_peeling(g: Graph, exact: bool = True, budget: Budget | None = None) -> Coloring:
    """Color round ``i`` with a maximum independent set of what is left.

    Each round realises ``sum <= |G| + sum(G - S)``. ``exact=False`` (or an
    exhausted ``budget`` in any round) switches to greedy maximal sets.
    """
    colors = [0] * g.n
    rest = g
    color = 0
    while rest.n:
        color += 1
        s = None
        if exact:
            try:
                s = max_independent_set(rest, budget)
            except BudgetExhausted:
                exact = False
        if s is None:
            s = maximal_independent_set_greedy(rest)
        origin = rest.origin if rest.origin is not None else range(rest.n)
        for v in s:
            colors[origin[v]] = color
        rest = induced_delete(rest, s)
    return Coloring(g, tuple(colors))


def _check_kneser(m: int, n: int) -> None:
    if n < 1 or m < 2 * n:
        raise KneserRangeError(f"needs m >= 2n >= 2, got m={m}, n={n}")


def kneser_star_peel(m: int, n: int) -> Coloring:
    """Coloring of KG(m, n) that peels stars.

    The n-subsets containing ``m`` get color 1, those containing ``m-1``
    (among the rest) color 2, and so on down to element ``2n + 1``. What
    remains is KG(2n, n), a perfect matching ``A -- complement(A)``; the
    member containing 1 takes the smaller of the two final colors.
    """
    _check_kneser(m, n)
    g = kneser(m, n)
    shift = m - 2 * n
    colors = []
    for subset in g.labels:
        top = subset[-1]
        if top > 2 * n:
            colors.append(m - top + 1)
        else:
            colors.append(shift + (1 if subset[0] == 1 else 2))
    return Coloring(g, tuple(colors))


def kneser_upper_formula(m: int, n: int) -> Fraction:
    """C(m+1, n+1) - (n-1)/(2n+2) * C(2n, n), exactly."""
    _check_kneser(m, n)
    return comb(m + 1, n + 1) - Fraction(n - 1, 2 * n + 2) * comb(2 * n, n)


# ---------------------------------------------------------------------------
# bound report


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: Fraction
    formula: str
    note: str = ""
    strict: bool = False  # upper bound that the chromatic sum never attains


@dataclass
class BoundsReport:
    n: int
    e: int
    omega: int | None
    alpha: int | None
    chi: int | None = None
    chif: Fraction | None = None
    sigma: int | None = None
    vertex_transitive: bool | None = None
    lower_bounds: list[BoundEntry] = field(default_factory=list)
    upper_bounds: list[BoundEntry] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def best_lower(self) -> Fraction:
        return max(b.value for b in self.lower_bounds)

    def best_upper(self) -> Fraction:
        return min(b.value for b in self.upper_bounds)

    def violations(self) -> list[str]:
        """Pairs of entries (and the exact sum, if known) that contradict each other."""
        out = []
        for lo in self.lower_bounds:
            for up in self.upper_bounds:
                if lo.value > up.value or (up.strict and lo.value == up.value):
                    out.append(f"{lo.name}={lo.value} vs {up.name}={up.value}")
        if self.sigma is not None:
            for lo in self.lower_bounds:
                if lo.value > self.sigma:
                    out.append(f"{lo.name}={lo.value} > sigma={self.sigma}")
            for up in self.upper_bounds:
                if up.value < self.sigma or (up.strict and up.value == self.sigma):
                    out.append(f"{up.name}={up.value} vs sigma={self.sigma}")
        return out

    def is_consistent(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class BoundOptions:
    chi: bool = False
    chif: bool = False
    sigma: bool = False
    transitivity: bool = True
    budget: Budget | None = None


def bounds_report(g: Graph, options: BoundOptions | None = None) -> BoundsReport:
    """Collect every applicable bound on the chromatic sum of ``g``.

    Entries depending on a solver that runs out of budget are left out and
    a note says so.
    """
    from .fractional import fractional_chromatic_number
    from .homomorphism import is_vertex_transitive

    opts = options or BoundOptions()
    budget = opts.budget
    n, e = g.n, g.num_edges
    rep = BoundsReport(n=n, e=e, omega=None, alpha=None)

    def attempt(label, fn):
        try:
            return fn()
        except BudgetExhausted as exc:
            rep.notes.append(f"{label} omitted: {exc}")
            return None

    if n:
        alpha_set = attempt("alpha", lambda: max_independent_set(g, budget))
        rep.alpha = len(alpha_set) if alpha_set is not None else None
        rep.omega = attempt("omega", lambda: clique_number(g, budget))
    else:
        rep.alpha = rep.omega = 0
    if opts.transitivity and n:
        rep.vertex_transitive = attempt("vertex transitivity", lambda: is_vertex_transitive(g, budget))
    if opts.chi:
        rep.chi = attempt("chi", lambda: chromatic_number(g, budget))
    if opts.chif:
        res = attempt("chi_f", lambda: fractional_chromatic_number(g, budget=budget))
        rep.chif = res.value if res is not None else None
    if opts.sigma:
        res = chromatic_sum_exact(g, budget)
        if res.optimal:
            rep.sigma = res.sigma
        else:
            rep.notes.append("sigma omitted: exact search exhausted its budget")

    lo, up = rep.lower_bounds, rep.upper_bounds
    lo.append(BoundEntry("trivial", Fraction(n), "n", "every vertex costs at least 1"))
    lo.append(BoundEntry("sqrt8e", Fraction(ceil_sqrt(8 * e)), "ceil(sqrt(8e))"))
    if rep.vertex_transitive and rep.omega is not None:
        lo.append(
            BoundEntry(
                "clique-transitive",
                Fraction(rep.omega + 1, 2) * n,
                "(omega+1)/2 * n",
                "vertex-transitive graphs only",
            )
        )
    elif rep.vertex_transitive is None and opts.transitivity and n:
        rep.notes.append("(omega+1)/2*n omitted: transitivity unknown")

    up.append(BoundEntry("greedy-edges", Fraction(n + e), "n + e"))
    # 3/2 (e + 1) holds per connected component
    ncomp = len(components(g))
    up.append(BoundEntry("edges", Fraction(3, 2) * (e + ncomp), "3/2 (e + components)",
                         "3/2 (e + 1) for connected graphs"))
    if rep.chi is not None:
        up.append(BoundEntry("chi", Fraction(rep.chi + 1, 2) * n, "(chi+1)/2 * n"))
    if rep.chif is not None and n:
        # edgeless graphs: the Kneser-map ratio is 2, not the LP value 1
        ratio = rep.chif if e else Fraction(2)
        up.append(BoundEntry("chif", ratio * n, "chi_f * n", "never attained", strict=True))
    if rep.vertex_transitive and rep.alpha and e:
        up.append(
            BoundEntry(
                "alpha-transitive",
                Fraction(n * n, rep.alpha),
                "n^2 / alpha",
                "vertex-transitive graphs with an edge; never attained",
                strict=True,
            )
        )
    greedy = greedy_sum_coloring(g, solver_order(g)).sum
    peel = mis_peeling(g, budget=budget).sum
    up.append(
        BoundEntry("heuristic", Fraction(min(greedy, peel)), "min(greedy, mis-peeling)",
                   f"greedy={greedy}, peeling={peel}")
    )
    return rep
