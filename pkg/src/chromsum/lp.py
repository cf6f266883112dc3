"""Exact two-phase primal simplex over rationals with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

GE, LE, EQ = ">=", "<=", "=="


class LPError(ArithmeticError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass
class LinearProgram:
    """Minimize (or maximize) ``c.x`` subject to ``A x (sense) b``, ``x >= 0``.

    Every row defaults to ``>=``. All data is converted to :class:`Fraction`.
    """

    A: Sequence[Sequence[Fraction | int]]
    b: Sequence[Fraction | int]
    c: Sequence[Fraction | int]
    senses: Sequence[str] | None = None
    minimize: bool = True

    def __post_init__(self):
        self.A = [[Fraction(x) for x in row] for row in self.A]
        self.b = [Fraction(x) for x in self.b]
        self.c = [Fraction(x) for x in self.c]
        if self.senses is None:
            self.senses = [GE] * len(self.A)
        self.senses = list(self.senses)
        if len(self.b) != len(self.A) or len(self.senses) != len(self.A):
            raise ValueError("A, b and senses need one entry per constraint")
        for row in self.A:
            if len(row) != len(self.c):
                raise ValueError("every constraint row needs one coefficient per variable")
        for s in self.senses:
            if s not in (GE, LE, EQ):
                raise ValueError(f"unknown constraint sense {s!r}")

    @property
    def num_vars(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    pivots: int = field(default=0, compare=False)


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows  # each row: coefficients..., rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        prow = self.rows[r]
        p = prow[j]
        if p != 1:
            prow = [x / p for x in prow]
            self.rows[r] = prow
        nz = [k for k, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], ncols: int) -> list[Fraction]:
        red = list(cost[:ncols])
        for row, bj in zip(self.rows, self.basis):
            cb = cost[bj]
            if cb:
                for k in range(ncols):
                    if row[k]:
                        red[k] -= cb * row[k]
        return red

    def optimize(self, cost: Sequence[Fraction], ncols: int) -> None:
        """Bland's rule: lowest-index improving column, lowest-index leaving variable."""
        while True:
            red = self.reduced_costs(cost, ncols)
            entering = next((k for k in range(ncols) if red[k] < 0), None)
            if entering is None:
                return
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise Unbounded("objective is unbounded")
            self.pivot(best[1], entering)


def lp_solve_exact(lp: LinearProgram) -> LPSolution:
    """Solve ``lp`` exactly; raises :class:`Infeasible` or :class:`Unbounded`."""
    nv = lp.num_vars
    rows_a, rows_b, senses = [], [], []
    for row, rhs, s in zip(lp.A, lp.b, lp.senses):
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
            s = {GE: LE, LE: GE, EQ: EQ}[s]
        rows_a.append(row)
        rows_b.append(rhs)
        senses.append(s)
    n_slack = sum(1 for s in senses if s != EQ)
    n_art = sum(1 for s in senses if s != LE)
    ncols = nv + n_slack + n_art
    first_art = nv + n_slack

    rows, basis = [], []
    si, ai = nv, first_art
    zero = Fraction(0)
    for row, rhs, s in zip(rows_a, rows_b, senses):
        t = list(row) + [zero] * (n_slack + n_art) + [rhs]
        if s == LE:
            t[si] = Fraction(1)
            basis.append(si)
            si += 1
        else:
            if s == GE:
                t[si] = Fraction(-1)
                si += 1
            t[ai] = Fraction(1)
            basis.append(ai)
            ai += 1
        rows.append(t)
    tab = _Tableau(rows, basis)

    if n_art:
        phase1 = [zero] * first_art + [Fraction(1)] * n_art
        tab.optimize(phase1, ncols)
        infeas = sum(row[-1] for row, bj in zip(tab.rows, tab.basis) if bj >= first_art)
        if infeas > 0:
            raise Infeasible("constraints admit no nonnegative solution")
        # artificials left in the basis sit at zero; pivot them out or drop the row
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= first_art:
                j = next((k for k in range(first_art) if tab.rows[i][k]), None)
                if j is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j)
            i += 1
        for row in tab.rows:
            del row[first_art:-1]

    sign = 1 if lp.minimize else -1
    cost = [sign * x for x in lp.c] + [zero] * n_slack
    tab.optimize(cost, nv + n_slack)
    x = [zero] * nv
    for row, bj in zip(tab.rows, tab.basis):
        if bj < nv:
            x[bj] = row[-1]
    value = sum((ci * xi for ci, xi in zip(lp.c, x)), zero)
    return LPSolution(value, tuple(x), tab.pivots)
