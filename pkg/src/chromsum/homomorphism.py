"""Homomorphism search, automorphism orbits and the chromatic-sum obstruction.

If ``H`` is vertex-transitive, any homomorphism ``G -> H`` forces
``sigma(G)/|G| <= sigma(H)/|H|``. Violating that inequality therefore
proves that no homomorphism exists; satisfying it proves nothing.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .budget import Budget, Meter
from .exact import solver_order
from .graph import Graph


class InvalidHomomorphism(ValueError):
    pass


@dataclass(frozen=True)
class HomMap:
    source: Graph = field(repr=False)
    target: Graph = field(repr=False)
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.source.n:
            raise InvalidHomomorphism("mapping must cover every source vertex")
        if any(not 0 <= h < self.target.n for h in mapping):
            raise InvalidHomomorphism("image outside the target graph")
        for u, v in self.source.edges():
            if not self.target.has_edge(mapping[u], mapping[v]):
                raise InvalidHomomorphism(f"edge ({u}, {v}) is not preserved")

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]


def find_homomorphism(g: Graph, h: Graph, budget: Budget | None = None) -> HomMap | None:
    """Backtracking with forward checking over candidate-image bitmasks.

    Returns a homomorphism, or None once the search has ruled every map
    out. Raises :class:`~chromsum.budget.BudgetExhausted` when it cannot
    decide within ``budget``.
    """
    if g.n == 0:
        return HomMap(g, h, ())
    if h.n == 0:
        return None
    if g == h:
        return HomMap(g, h, tuple(range(g.n)))
    order = solver_order(g)
    hmasks = h.masks
    full = (1 << h.n) - 1
    image = [-1] * g.n
    meter = Meter(budget)

    def search(depth: int, domains: list[int]) -> bool:
        meter.tick()
        if depth == g.n:
            return True
        v = order[depth]
        dom = domains[v]
        while dom:
            low = dom & -dom
            x = low.bit_length() - 1
            dom ^= low
            new = domains[:]
            ok = True
            for u in g.neighbors(v):
                if image[u] < 0:
                    new[u] &= hmasks[x]
                    if not new[u]:
                        ok = False
                        break
            if ok:
                image[v] = x
                if search(depth + 1, new):
                    return True
                image[v] = -1
        return False

    if search(0, [full] * g.n):
        return HomMap(g, h, tuple(image))
    return None


# ---------------------------------------------------------------------------
# automorphisms


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Splits and orders sub-cells by neighbour-count signatures only, so two
    partitions related by an automorphism refine to partitions related by
    the same automorphism.
    """
    n = len(masks)
    while True:
        cell_mask = [0] * len(cells)
        for i, cell in enumerate(cells):
            for v in cell:
                cell_mask[i] |= 1 << v
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = defaultdict(list)
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_mask)
                groups[sig].append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return cells
        cells = new_cells
        if len(cells) == n:
            return cells


def _profile(masks: Sequence[int], cells: list[list[int]]) -> list[tuple]:
    cell_mask = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        cell_mask.append(m)
    return [
        (len(cell), tuple((masks[cell[0]] & cm).bit_count() for cm in cell_mask))
        for cell in cells
    ]


def _individualize(cells: list[list[int]], i: int, x: int) -> list[list[int]]:
    rest = [v for v in cells[i] if v != x]
    return cells[:i] + [[x], rest] + cells[i + 1:]


def _is_automorphism(masks: Sequence[int], perm: Sequence[int]) -> bool:
    for v, a in enumerate(masks):
        img = 0
        while a:
            low = a & -a
            img |= 1 << perm[low.bit_length() - 1]
            a ^= low
        if img != masks[perm[v]]:
            return False
    return True


def _extend(masks, left, right, meter) -> list[int] | None:
    meter.tick()
    left = _refine(masks, left)
    right = _refine(masks, right)
    if len(left) != len(right) or _profile(masks, left) != _profile(masks, right):
        return None
    if len(left) == len(masks):
        perm = [0] * len(masks)
        for a, b in zip(left, right):
            perm[a[0]] = b[0]
        return perm if _is_automorphism(masks, perm) else None
    i = next(k for k, cell in enumerate(left) if len(cell) > 1)
    x = left[i][0]
    for y in right[i]:
        perm = _extend(masks, _individualize(left, i, x), _individualize(right, i, y), meter)
        if perm is not None:
            return perm
    return None


def find_automorphism(g: Graph, a: int, b: int, budget: Budget | None = None) -> list[int] | None:
    """An automorphism sending ``a`` to ``b`` (as a permutation list), or None."""
    masks = g.masks
    base = _refine(masks, [list(range(g.n))])
    idx = next(i for i, c in enumerate(base) if a in c)
    if b not in base[idx]:
        return None
    meter = Meter(budget)
    return _extend(masks, _individualize(base, idx, a), _individualize(base, idx, b), meter)


@dataclass(frozen=True)
class OrbitSearch:
    orbits: tuple[tuple[int, ...], ...]
    automorphisms: tuple[tuple[int, ...], ...]  # every one found; together they generate the orbits


def orbit_search(g: Graph, budget: Budget | None = None) -> OrbitSearch:
    """Vertex orbits of Aut(g) together with the automorphisms that witness them.

    Starts from the equitable partition (orbits never cross its cells) and,
    inside each cell, asks for an automorphism joining each vertex to each
    orbit representative found so far.
    """
    n = g.n
    masks = g.masks
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    meter = Meter(budget)
    found: list[tuple[int, ...]] = []
    base = _refine(masks, [list(range(n))]) if n else []
    for idx, cell in enumerate(base):
        reps: list[int] = []
        for v in cell:
            if any(find(v) == find(r) for r in reps):
                continue
            joined = False
            for r in reps:
                perm = _extend(masks, _individualize(base, idx, r), _individualize(base, idx, v), meter)
                if perm is not None:
                    found.append(tuple(perm))
                    for x in range(n):
                        union(x, perm[x])
                    joined = True
                    break
            if not joined:
                reps.append(v)
    groups = defaultdict(list)
    for v in range(n):
        groups[find(v)].append(v)
    orbits = tuple(sorted(tuple(vs) for vs in groups.values()))
    return OrbitSearch(orbits, tuple(found))


def automorphism_orbits(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    return [frozenset(o) for o in orbit_search(g, budget).orbits]


def is_vertex_transitive(g: Graph, budget: Budget | None = None) -> bool:
    if g.n <= 1:
        return True
    if len(set(g.degrees())) > 1:
        return False
    if len(_refine(g.masks, [list(range(g.n))])) > 1:
        return False
    return len(orbit_search(g, budget).orbits) == 1


# ---------------------------------------------------------------------------
# obstruction


class Outcome(enum.Enum):
    NO_HOMOMORPHISM_PROVEN = "no-homomorphism-proven"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ObstructionVerdict:
    outcome: Outcome
    ratio_source: Fraction | None  # sigma_G / |G| (or a lower bound of it)
    ratio_target: Fraction | None  # sigma_H / |H| (or an upper bound of it)
    target_transitive: bool
    reason: str = ""

    @property
    def proven(self) -> bool:
        return self.outcome is Outcome.NO_HOMOMORPHISM_PROVEN


def obstruction_test(
    g: Graph,
    h: Graph,
    sigma_g: int | Fraction,
    sigma_h: int | Fraction,
    budget: Budget | None = None,
) -> ObstructionVerdict:
    """Chromatic-sum test for the non-existence of a homomorphism ``g -> h``.

    ``sigma_g`` must be the chromatic sum of ``g`` or a lower bound on it and
    ``sigma_h`` the chromatic sum of ``h`` or an upper bound; weakening
    either side in that direction keeps a positive answer sound. Equal
    ratios are inconclusive. The test never claims that a map exists.
    """
    if h.n == 0:
        return ObstructionVerdict(Outcome.NOT_APPLICABLE, None, None, False, "empty target graph")
    if g.n == 0:
        return ObstructionVerdict(Outcome.INCONCLUSIVE, None, None, True,
                                  "empty source maps into every graph")
    transitive = is_vertex_transitive(h, budget)
    rg = Fraction(sigma_g) / g.n
    rh = Fraction(sigma_h) / h.n
    if not transitive:
        return ObstructionVerdict(Outcome.NOT_APPLICABLE, rg, rh, False,
                                  "target is not vertex-transitive")
    if rg > rh:
        return ObstructionVerdict(Outcome.NO_HOMOMORPHISM_PROVEN, rg, rh, True, f"{rg} > {rh}")
    return ObstructionVerdict(Outcome.INCONCLUSIVE, rg, rh, True, f"{rg} <= {rh}")
