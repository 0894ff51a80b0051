"""Independent ground-truth shortest-path computations.

Two deliberately unrelated oracles back the labeling engines: an iterative
edge-sweep (Bellman-Ford) and a combinatorial search over simple paths. A bug
would have to hit both to validate a wrong answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import GraphTooLarge
from .graph import Graph, check_vertex
from .tree import Route
from .weights import INFINITY, Weight

MAX_ENUMERATION_VERTICES = 12


class OracleMethod(enum.Enum):
    BELLMAN_FORD = "bellman-ford"
    ENUMERATION = "enumeration"


@dataclass(frozen=True)
class OracleResult:
    distances: tuple[Weight, ...]
    method: OracleMethod


def bellman_ford(g: Graph, source: int) -> OracleResult:
    """Exact single-source distances via at most n-1 full relaxation sweeps."""
    check_vertex(g, source)
    dist: list[Weight] = [INFINITY] * g.n
    dist[source - 1] = Weight.zero()
    edges = list(g.edges())
    for _ in range(g.n - 1):
        improved = False
        for u, v, w in edges:
            candidate = dist[u - 1] + w
            if candidate < dist[v - 1]:
                dist[v - 1] = candidate
                improved = True
        if not improved:
            break
    return OracleResult(tuple(dist), OracleMethod.BELLMAN_FORD)


def enumerate_min_path(
    g: Graph, source: int, target: int
) -> tuple[Weight, Route | None]:
    """Minimum total over all simple paths source -> target, with a witness.

    Exhaustive search with an admissible cut: a partial path already at or
    above the best complete total cannot finish cheaper, since every edge is
    strictly positive. Guarded to n <= 12 against factorial blow-up.
    """
    if g.n > MAX_ENUMERATION_VERTICES:
        raise GraphTooLarge(f"enumeration limited to n <= {MAX_ENUMERATION_VERTICES}")
    check_vertex(g, source)
    check_vertex(g, target)
    if source == target:
        return Weight.zero(), Route((source,), Weight.zero())

    best: Weight = INFINITY
    best_vertices: tuple[int, ...] | None = None
    direct = g.weight(source, target)
    if direct.is_finite:
        best = direct
        best_vertices = (source, target)

    def visit(v: int, total: Weight, path: tuple[int, ...], visited: frozenset[int]):
        nonlocal best, best_vertices
        for u in g.vertices():
            if u in visited:
                continue
            w = g.weight(v, u)
            if w.is_infinite:
                continue
            extended = total + w
            if u == target:
                if extended < best:
                    best = extended
                    best_vertices = path + (u,)
                continue
            if extended >= best:
                continue
            visit(u, extended, path + (u,), visited | {u})

    visit(source, Weight.zero(), (source,), frozenset({source}))
    if best_vertices is None:
        return INFINITY, None
    return best, Route(best_vertices, best)
