"""Exact chromatic sums of Kneser graphs against the star-peeling closed form.

The closed form ``C(m+1, n+1) - (n-1)/(2n+2) * C(2n, n)`` is the sum of the
star-peeling coloring, hence a proven upper bound; whether it is always the
exact value is open. Rows record what the exact solver finds.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bounds import kneser_star_peel, kneser_upper_formula
from .budget import Budget
from .exact import chromatic_sum_exact
from .graph import KneserRangeError, kneser

DEFAULT_ROW_NODES = 2_000_000


class Verdict(enum.Enum):
    MATCH = "match"
    EXACT_BELOW = "exact-below-conjecture"
    UNKNOWN = "unknown"


class InternalInvariantError(RuntimeError):
    """A computed value contradicts a proven relation; indicates a bug."""


@dataclass(frozen=True)
class ConjectureRow:
    m: int
    n: int
    vertices: int
    exact_sigma: int | None
    best_upper: int  # best coloring sum found by the solver (equals exact_sigma when known)
    star_peel_sigma: int
    conjectured: Fraction
    verdict: Verdict
    nodes: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "vertices": self.vertices,
            "exact_sigma": self.exact_sigma,
            "best_upper": self.best_upper,
            "star_peel_sigma": self.star_peel_sigma,
            "conjectured": {"num": self.conjectured.numerator, "den": self.conjectured.denominator},
            "verdict": self.verdict.value,
            "nodes": self.nodes,
        }


def conjecture_check(m: int, n: int, budget: Budget | None = None) -> ConjectureRow:
    if n < 1 or m < 2 * n:
        raise KneserRangeError(f"needs m >= 2n >= 2, got m={m}, n={n}")
    if budget is None:
        budget = Budget(max_nodes=DEFAULT_ROW_NODES)
    conj = kneser_upper_formula(m, n)
    peel = kneser_star_peel(m, n).sum
    if peel != conj:
        raise InternalInvariantError(f"star peel {peel} != closed form {conj} for KG({m},{n})")
    res = chromatic_sum_exact(kneser(m, n), budget)
    if res.sigma > conj:
        raise InternalInvariantError(f"solver reports {res.sigma} above the proven bound {conj}")
    if res.optimal:
        exact = res.sigma
        verdict = Verdict.MATCH if exact == conj else Verdict.EXACT_BELOW
    else:
        exact, verdict = None, Verdict.UNKNOWN
    return ConjectureRow(m, n, comb(m, n), exact, res.sigma, peel, conj, verdict, res.nodes)


def explore(max_m: int, max_n: int, budget: Budget | None = None) -> list[ConjectureRow]:
    """Every valid ``(m, n)`` with ``n <= max_n`` and ``2n <= m <= max_m``.

    Rows are ordered by (vertex count, m, n). Budgets are per row.
    """
    if max_n < 1 or max_m < 2:
        raise KneserRangeError(f"need max_n >= 1 and max_m >= 2, got {max_m}, {max_n}")
    pairs = [(m, n) for n in range(1, max_n + 1) for m in range(2 * n, max_m + 1)]
    pairs.sort(key=lambda p: (comb(p[0], p[1]), p[0], p[1]))
    return [conjecture_check(m, n, budget) for m, n in pairs]


def format_table(rows: list[ConjectureRow]) -> str:
    header = ("m", "n", "|V|", "exact", "star-peel", "conjectured", "verdict")
    body = [
        (
            str(r.m),
            str(r.n),
            str(r.vertices),
            str(r.exact_sigma) if r.exact_sigma is not None else f"<={r.best_upper}",
            str(r.star_peel_sigma),
            str(r.conjectured),
            r.verdict.value,
        )
        for r in rows
    ]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [header, *body]]
    return "\n".join(lines)
