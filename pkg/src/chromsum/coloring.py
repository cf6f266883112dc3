"""Proper colorings with positive integer colors, and the greedy sum coloring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph


class ImproperColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """A proper coloring ``colors[v] >= 1``; validated on construction."""

    graph: Graph = field(repr=False)
    colors: tuple[int, ...]
    sum: int = field(init=False)
    num_colors: int = field(init=False)

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.graph.n:
            raise ImproperColoringError(
                f"{len(colors)} colors given for {self.graph.n} vertices"
            )
        for v, c in enumerate(colors):
            if not isinstance(c, int) or c < 1:
                raise ImproperColoringError(f"vertex {v} has invalid color {c!r}")
        for u, v in self.graph.edges():
            if colors[u] == colors[v]:
                raise ImproperColoringError(f"edge ({u}, {v}) is monochromatic")
        object.__setattr__(self, "sum", sum(colors))
        object.__setattr__(self, "num_colors", max(colors, default=0))

    def classes(self) -> list[list[int]]:
        """Color classes, ``classes()[i]`` holding the vertices of color ``i + 1``."""
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def is_locally_minimal(self) -> bool:
        """True when no single vertex can be recolored with a smaller color."""
        g = self.graph
        for v, c in enumerate(self.colors):
            seen = {self.colors[u] for u in g.neighbors(v)}
            if any(k not in seen for k in range(1, c)):
                return False
        return True


def greedy_sum_coloring(g: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring along ``order`` (default: natural order).

    Each vertex gets the smallest color missing among its already-colored
    neighbours, so its color is at most one more than its number of earlier
    neighbours, giving a total of at most n + e.
    """
    order = list(range(g.n)) if order is None else list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors = [0] * g.n
    for v in order:
        used = {colors[u] for u in g.neighbors(v)}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(g, tuple(colors))
