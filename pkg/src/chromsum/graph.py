"""Simple undirected graphs and the named families used throughout the toolkit.

Vertices are dense indices ``0..n-1``. Adjacency is stored as one integer
bitmask per vertex, so edge queries are a single bit test and neighbourhood
intersections are integer ``&``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Hashable, Iterable, Iterator, Sequence

VertexSet = frozenset  # frozenset[int]; members are vertex indices of a host graph


class GraphError(ValueError):
    """Invalid graph construction or generator parameters."""


class KneserRangeError(GraphError):
    """Kneser parameters with m < 2n (or n < 1)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable finite simple graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v)
        Duplicate edges and both orientations are accepted; self-loops raise.
    labels : sequence, optional
        Per-vertex metadata (e.g. the subset a Kneser vertex stands for).
        Never consulted by the solvers.
    origin : sequence of int, optional
        For induced subgraphs, the index each vertex had in the parent graph.
    """

    __slots__ = ("_n", "_adj", "_nbrs", "_m", "labels", "origin")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[Hashable] | None = None,
        origin: Sequence[int] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise GraphError("labels must have one entry per vertex")
        if origin is not None and len(origin) != n:
            raise GraphError("origin must have one entry per vertex")
        self._init(n, adj, labels, origin)

    def _init(self, n, adj, labels, origin):
        self._n = n
        self._adj = tuple(adj)
        self._nbrs = tuple(tuple(iter_bits(a)) for a in adj)
        self._m = sum(len(nb) for nb in self._nbrs) // 2
        self.labels = tuple(labels) if labels is not None else None
        self.origin = tuple(origin) if origin is not None else None

    @classmethod
    def from_masks(cls, masks: Sequence[int], labels=None, origin=None) -> "Graph":
        """Build directly from adjacency bitmasks (must already be symmetric)."""
        g = cls.__new__(cls)
        n = len(masks)
        for v, a in enumerate(masks):
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if a >> n:
                raise GraphError(f"neighbour out of range at vertex {v}")
        for v, a in enumerate(masks):
            for u in iter_bits(a):
                if not masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g._init(n, list(masks), labels, origin)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self._n

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self._n):
            for v in self._nbrs[u]:
                if v > u:
                    yield (u, v)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not (self._adj[v] & m) for v in iter_bits(m))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._m})"


# ---------------------------------------------------------------------------
# generators


def kneser(m: int, n: int) -> Graph:
    """Kneser graph KG(m, n): n-subsets of {1..m}, adjacent when disjoint.

    Vertices follow the lexicographic order of the subsets, which are kept
    as labels.
    """
    if n < 1 or m < 2 * n:
        raise KneserRangeError(f"kneser needs m >= 2n >= 2, got m={m}, n={n}")
    subsets = list(combinations(range(1, m + 1), n))
    bits = [mask_of(s) for s in subsets]
    adj = [0] * len(subsets)
    for i, a in enumerate(bits):
        for j in range(i + 1, len(bits)):
            if not a & bits[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph.from_masks(adj, labels=subsets)


def circular_complete(p: int, q: int) -> Graph:
    """Circular complete graph K_{p/q}: i ~ j iff q <= circular distance <= p - q."""
    if q < 1 or p < 2 * q:
        raise GraphError(f"circular_complete needs p >= 2q >= 2, got p={p}, q={q}")
    edges = []
    for i, j in combinations(range(p), 2):
        d = min(j - i, p - (j - i))
        if q <= d <= p - q:
            edges.append((i, j))
    return Graph(p, edges, labels=list(range(p)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices."""
    if n < 0:
        raise GraphError(f"empty needs n >= 0, got {n}")
    return Graph(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    return kneser(5, 2)


def random_gnp(n: int, p: Fraction | float | int | str, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in ``seed``.

    Uses :class:`random.Random` (Mersenne Twister) seeded with ``seed``; pairs
    ``(i, j)``, ``i < j``, are visited in lexicographic order and each is kept
    when ``rng.random() < p``. ``p`` is compared as an exact fraction.
    """
    if n < 1:
        raise GraphError(f"random_gnp needs n >= 1, got {n}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2) if Fraction(rng.random()) < p]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# derived graphs


def induced_delete(g: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on ``V(g) - removed``.

    Surviving vertices keep their relative order; ``result.origin[i]`` is the
    index vertex ``i`` had in ``g`` (composed through earlier deletions).
    """
    rm = mask_of(removed)
    if rm >> g.n:
        raise GraphError("deleted set contains vertices outside the graph")
    keep = [v for v in range(g.n) if not rm >> v & 1]
    new_index = {old: new for new, old in enumerate(keep)}
    masks = []
    for old in keep:
        masks.append(mask_of(new_index[u] for u in g.neighbors(old) if u in new_index))
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    base = g.origin if g.origin is not None else range(g.n)
    return Graph.from_masks(masks, labels=labels, origin=[base[v] for v in keep])


def old_to_new(sub: Graph) -> dict[int, int]:
    """Inverse of ``sub.origin``: parent index -> subgraph index."""
    if sub.origin is None:
        return {v: v for v in range(sub.n)}
    return {old: new for new, old in enumerate(sub.origin)}


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = [full & ~a & ~(1 << v) for v, a in enumerate(g.masks)]
    return Graph.from_masks(masks, labels=g.labels)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = reach = 1 << v
        while reach:
            nxt = 0
            for u in iter_bits(reach):
                nxt |= g.neighbor_mask(u)
            reach = nxt & ~comp
            comp |= reach
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def kneser_counts(m: int, n: int) -> tuple[int, int]:
    """(vertex count, edge count) of KG(m, n) from the closed forms."""
    return comb(m, n), comb(m, n) * comb(m - n, n) // 2
