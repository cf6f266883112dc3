"""Exact exponential-time solvers: chromatic sum, strength, chi, alpha, omega."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .budget import Budget, BudgetExhausted, Meter
from .coloring import Coloring, greedy_sum_coloring
from .graph import Graph, VertexSet, complement, iter_bits


@dataclass(frozen=True)
class SumResult:
    """Outcome of :func:`chromatic_sum_exact`.

    When ``optimal`` is False the search ran out of budget and ``sigma`` is
    only an upper bound (the best coloring found so far).
    """

    sigma: int
    witness: Coloring
    strength: int
    optimal: bool
    nodes: int
    elapsed: float


_ALPHA_NODES = 200_000


def solver_order(g: Graph) -> list[int]:
    """Descending degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def chromatic_sum_exact(g: Graph, budget: Budget | None = None) -> SumResult:
    """Minimum color sum over proper colorings, by depth-first branch and bound.

    Among optimal colorings the witness minimises the number of colors, then
    is the lexicographically smallest color vector read in solver order.

    Pruning rests on two facts about every optimal coloring: each vertex ``v``
    sees all colors ``1..c(v)-1`` in its neighbourhood (so ``c(v) <= deg+1``),
    and every uncolored vertex costs at least the smallest color its colored
    neighbours leave free. Independently, no color class exceeds alpha(G)
    vertices, which caps how many uncolored vertices each color can absorb.
    """
    start = time.perf_counter()
    n = g.n
    if n == 0:
        return SumResult(0, Coloring(g, ()), 0, True, 0, 0.0)

    order = solver_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    nbrs = [g.neighbors(v) for v in range(n)]
    deg = [len(nb) for nb in nbrs]
    top = max(deg) + 2
    # neighbour color histogram per vertex
    counts = [[0] * (top + 1) for _ in range(n)]
    color = [0] * n
    uncolored_nbrs = deg[:]
    # colors below c(v) still missing from v's neighbourhood, for colored v
    deficit = [0] * n
    later_nbrs = [[u for u in nbrs[v] if pos[u] > pos[v]] for v in range(n)]

    try:
        alpha = len(max_independent_set(g, Budget(max_nodes=_ALPHA_NODES)))
    except BudgetExhausted:
        alpha = n
    class_size = [0] * (top + 1)

    greedy = greedy_sum_coloring(g, order)
    best_colors = list(greedy.colors)
    best_key = (greedy.sum, greedy.num_colors)
    best_from_search = False
    meter = Meter(budget)

    def lower_bound(depth: int) -> int:
        lb = 0
        for i in range(depth, n):
            cnt = counts[order[i]]
            c = 1
            while cnt[c]:
                c += 1
            lb += c
        # fill the cheapest colors up to their remaining class capacity
        left = n - depth
        cap_lb = 0
        c = 1
        while left > 0:
            room = alpha - class_size[c] if c <= top else alpha
            if room > 0:
                take = room if room < left else left
                cap_lb += take * c
                left -= take
            c += 1
        return lb if lb > cap_lb else cap_lb

    def search(depth: int, partial: int, used_max: int) -> None:
        nonlocal best_key, best_colors, best_from_search
        meter.tick()
        if depth == n:
            key = (partial, used_max)
            if key < best_key or (key == best_key and not best_from_search):
                best_key = key
                best_colors = color[:]
                best_from_search = True
            return
        v = order[depth]
        cnt = counts[v]
        free_later = len(later_nbrs[v])
        missing = 0
        for c in range(1, deg[v] + 2):
            if c > 1 and not cnt[c - 1]:
                missing += 1
                # v's color could be lowered in any completion
                if missing > free_later:
                    break
            if cnt[c]:
                continue
            new_partial = partial + c
            new_max = used_max if used_max > c else c
            # assign
            color[v] = c
            deficit[v] = missing
            class_size[c] += 1
            ok = True
            touched = []
            for u in nbrs[v]:
                counts[u][c] += 1
                uncolored_nbrs[u] -= 1
                cu = color[u]
                if cu:
                    if c < cu and counts[u][c] == 1:
                        deficit[u] -= 1
                        touched.append(u)
                    if deficit[u] > uncolored_nbrs[u]:
                        ok = False
            if ok:
                lb = new_partial + lower_bound(depth + 1)
                bound = (lb, new_max)
                if bound < best_key or (bound == best_key and not best_from_search):
                    search(depth + 1, new_partial, new_max)
            # undo
            for u in touched:
                deficit[u] += 1
            for u in nbrs[v]:
                counts[u][c] -= 1
                uncolored_nbrs[u] += 1
            class_size[c] -= 1
            color[v] = 0

    optimal = True
    try:
        search(0, 0, 0)
    except BudgetExhausted:
        optimal = False
    witness = Coloring(g, tuple(best_colors))
    return SumResult(
        sigma=witness.sum,
        witness=witness,
        strength=witness.num_colors,
        optimal=optimal,
        nodes=meter.nodes,
        elapsed=time.perf_counter() - start,
    )


def strength(g: Graph, budget: Budget | None = None) -> int:
    """Fewest colors used by any coloring attaining the chromatic sum.

    Raises :class:`BudgetExhausted` if the sum search did not finish, since
    a truncated search says nothing about the strength.
    """
    res = chromatic_sum_exact(g, budget)
    if not res.optimal:
        raise BudgetExhausted("strength needs a completed chromatic sum search", res.nodes)
    return res.strength


# ---------------------------------------------------------------------------
# chromatic number


def _k_colorable(g: Graph, k: int, meter: Meter) -> list[int] | None:
    """DSATUR-ordered backtracking; returns a k-coloring or None."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    counts = [[0] * (k + 1) for _ in range(n)]
    sat = [0] * n
    color = [0] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if not color[v]:
                key = (sat[v], len(nbrs[v]))
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def search(done: int, used: int) -> bool:
        meter.tick()
        if done == n:
            return True
        v = pick()
        if sat[v] >= k:
            return False
        # colors above used+1 are interchangeable with used+1
        for c in range(1, min(k, used + 1) + 1):
            if counts[v][c]:
                continue
            color[v] = c
            for u in nbrs[v]:
                counts[u][c] += 1
                if counts[u][c] == 1:
                    sat[u] += 1
            if search(done + 1, max(used, c)):
                return True
            for u in nbrs[v]:
                counts[u][c] -= 1
                if not counts[u][c]:
                    sat[u] -= 1
            color[v] = 0
        return False

    return color[:] if search(0, 0) else None


def chromatic_number(g: Graph, budget: Budget | None = None) -> int:
    """Least k with a proper k-coloring, deepening upward from the clique number."""
    if g.n == 0:
        return 0
    meter = Meter(budget)
    k = clique_number(g)
    upper = greedy_sum_coloring(g, solver_order(g)).num_colors
    while k < upper:
        if _k_colorable(g, k, meter) is not None:
            return k
        k += 1
    return upper


# ---------------------------------------------------------------------------
# independence and clique numbers


def _clique_cover_size(masks: tuple[int, ...], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand`` (bounds alpha)."""
    k = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        grow = cand & masks[v]
        while grow:
            lb = grow & -grow
            u = lb.bit_length() - 1
            cand &= ~lb
            grow &= masks[u]
        k += 1
    return k


def max_independent_set(g: Graph, budget: Budget | None = None) -> VertexSet:
    """A maximum independent set, lexicographically least among the maximum ones.

    Branches on the lowest-index candidate (include before exclude), so the
    first maximum set reached is the lexicographically least; the greedy
    clique cover of the candidates bounds what a branch can still add.
    """
    masks = g.masks
    meter = Meter(budget)
    best_size = -1
    best = 0

    def search(cand: int, cur: int, size: int) -> None:
        nonlocal best_size, best
        meter.tick()
        if not cand:
            if size > best_size:
                best_size, best = size, cur
            return
        if size + _clique_cover_size(masks, cand) <= best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        search(rest & ~masks[v], cur | low, size + 1)
        # excluding v cannot help if v has no candidate neighbours
        if rest & masks[v]:
            search(rest, cur, size)

    search((1 << g.n) - 1, 0, 0)
    return frozenset(iter_bits(best))


def independence_number(g: Graph, budget: Budget | None = None) -> int:
    return len(max_independent_set(g, budget))


def clique_number(g: Graph, budget: Budget | None = None) -> int:
    return len(max_independent_set(complement(g), budget))
