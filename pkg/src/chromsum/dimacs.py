"""DIMACS ``.col`` reader/writer.

External indices are 1-based, internal ones 0-based. Duplicate edge lines
and both orientations collapse to one edge; self-loops are rejected.
"""

from __future__ import annotations

from .graph import Graph


class DimacsParseError(ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


def read_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise DimacsParseError(lineno, "bad header, expected 'p edge <n> <e>'")
            try:
                n, _declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsParseError(lineno, "bad header, non-integer counts") from None
            if n < 0 or _declared < 0:
                raise DimacsParseError(lineno, "bad header, negative counts")
        elif tag == "e":
            if n is None:
                raise DimacsParseError(lineno, "edge line before header")
            if len(parts) != 3:
                raise DimacsParseError(lineno, "edge line needs exactly two endpoints")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError(lineno, "non-integer vertex index") from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise DimacsParseError(lineno, f"vertex index {x} out of range 1..{n}")
            if u == v:
                raise DimacsParseError(lineno, f"self-loop at vertex {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsParseError(0, "missing 'p edge' header")
    return Graph(n, sorted(edges))


def write_dimacs(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.num_edges}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
