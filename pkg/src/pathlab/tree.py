"""Shortest-path-tree matrix built from a finished run, and route extraction.

Entry (i, j) of the tree matrix holds the edge weight when i is the chosen
parent of j in the shortest-path tree, zero otherwise. Real edges are
strictly positive, so zero unambiguously means "no link". Under equal-length
alternatives the lowest predecessor id is chosen, deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsettledVertex, VertexOutOfRange
from .graph import Graph
from .labeling import RunTrace
from .weights import INFINITY, Weight


@dataclass(frozen=True)
class TreeMatrix:
    n: int
    source: int
    entries: tuple[tuple[Weight, ...], ...]

    def weight(self, u: int, v: int) -> Weight:
        return self.entries[u - 1][v - 1]

    def parent(self, v: int) -> int | None:
        """The unique i with a nonzero (i, v) entry, or None for no parent."""
        for u in range(1, self.n + 1):
            if self.entries[u - 1][v - 1] != Weight.zero():
                return u
        return None

    def nonzero(self) -> dict[tuple[int, int], Weight]:
        return {
            (u, v): self.entries[u - 1][v - 1]
            for u in range(1, self.n + 1)
            for v in range(1, self.n + 1)
            if self.entries[u - 1][v - 1] != Weight.zero()
        }


@dataclass(frozen=True)
class Route:
    """A source-to-target vertex sequence and its total weight.

    Empty vertices with an INFINITY total means the target is unreachable.
    """

    vertices: tuple[int, ...]
    total: Weight

    def __str__(self) -> str:
        if not self.vertices:
            return "no path (INF)"
        return "-".join(str(v) for v in self.vertices) + f" ({self.total})"


def build_tree_matrix(g: Graph, trace: RunTrace, strict: bool = False) -> TreeMatrix:
    """Parent links for every settled non-source vertex of the trace.

    The parent is the lowest id in the vertex's final predecessor set.
    Unsettled vertices simply get no parent, unless ``strict`` is set and the
    trace's target is among them.
    """
    labels = trace.final_labels
    if strict and trace.target is not None and not labels.is_permanent(trace.target):
        raise UnsettledVertex(f"target {trace.target} was never settled")
    zero = Weight.zero()
    entries = [[zero] * g.n for _ in range(g.n)]
    for j in g.vertices():
        if j == trace.source or not labels.is_permanent(j):
            continue
        parent = min(labels.predecessors(j))
        entries[parent - 1][j - 1] = g.weight(parent, j)
    return TreeMatrix(g.n, trace.source, tuple(tuple(row) for row in entries))


def extract_path(t: TreeMatrix, target: int) -> Route:
    """Walk parent links from target back to the source and sum the edges."""
    if not (1 <= target <= t.n):
        raise VertexOutOfRange(f"vertex {target} outside 1..{t.n}")
    if target == t.source:
        return Route((t.source,), Weight.zero())
    chain = [target]
    current = target
    while current != t.source:
        parent = t.parent(current)
        if parent is None:
            return Route((), INFINITY)
        if len(chain) > t.n:
            raise ValueError("parent links do not form a tree")
        chain.append(parent)
        current = parent
    chain.reverse()
    total = Weight.zero()
    for u, v in zip(chain, chain[1:]):
        total = total + t.weight(u, v)
    return Route(tuple(chain), total)
