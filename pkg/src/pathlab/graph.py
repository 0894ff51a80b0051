"""Weighted digraph stored as an n-by-n matrix, plus parsers and validation.

Entry (i, j) is the weight of the directed edge i -> j: zero on the diagonal,
strictly positive for a real edge, INFINITY where no edge exists. Vertex ids
are 1-based everywhere in the public API.

File formats
------------
Matrix: optional ``#`` comment lines, then the vertex count n, then n*n
whitespace-separated tokens in row-major order. A token is a decimal literal
or the literal ``INF`` (case-insensitive).

Edge list: optional ``#`` comment lines, a header line ``n m``, then m lines
``u v w`` with 1-based endpoints and a positive decimal weight. Unlisted
off-diagonal pairs get INFINITY.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    DiagonalNonZero,
    DuplicateEdge,
    MalformedInput,
    NegativeOrZeroWeight,
    SelfLoop,
    VertexOutOfRange,
)
from .weights import INFINITY, Weight


@dataclass(frozen=True)
class Graph:
    """Immutable weighted digraph; safe to share across concurrent readers."""

    n: int
    weights: tuple[tuple[Weight, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.weights) != self.n or any(len(row) != self.n for row in self.weights):
            raise ValueError(f"weight matrix must be {self.n}x{self.n}")

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def contains_vertex(self, v: int) -> bool:
        return 1 <= v <= self.n

    def weight(self, u: int, v: int) -> Weight:
        check_vertex(self, u)
        check_vertex(self, v)
        return self.weights[u - 1][v - 1]

    def edges(self) -> Iterator[tuple[int, int, Weight]]:
        """Finite off-diagonal entries as (u, v, weight), row-major."""
        for u in self.vertices():
            row = self.weights[u - 1]
            for v in self.vertices():
                if u != v and row[v - 1].is_finite:
                    yield u, v, row[v - 1]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, object]]) -> "Graph":
        """Programmatic constructor: listed edges, INFINITY elsewhere."""
        rows = [
            [Weight.zero() if i == j else INFINITY for j in range(n)]
            for i in range(n)
        ]
        for u, v, w in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            if rows[u - 1][v - 1].is_finite:
                raise ValueError(f"edge ({u},{v}) listed twice")
            rows[u - 1][v - 1] = w if isinstance(w, Weight) else Weight.finite(w)
        return cls(n, tuple(tuple(row) for row in rows))


def check_vertex(g: Graph, v: int) -> None:
    if not g.contains_vertex(v):
        raise VertexOutOfRange(f"vertex {v} outside 1..{g.n}")


@dataclass(frozen=True)
class Violation:
    """One graph-invariant violation found by :func:`validate`."""

    kind: type[Exception]
    row: int
    col: int
    value: Weight

    def __str__(self) -> str:
        return f"{self.kind.__name__} at ({self.row},{self.col}): {self.value}"


def validate(g: Graph) -> list[Violation]:
    """Every invariant violation in row-major order; empty means ok."""
    violations = []
    for i in g.vertices():
        for j in g.vertices():
            w = g.weights[i - 1][j - 1]
            if i == j:
                if w != Weight.zero():
                    violations.append(Violation(DiagonalNonZero, i, j, w))
            elif w.is_finite and w <= Weight.zero():
                violations.append(Violation(NegativeOrZeroWeight, i, j, w))
    return violations


def _raise_first_violation(g: Graph) -> Graph:
    violations = validate(g)
    if violations:
        first = violations[0]
        raise first.kind(str(first))
    return g


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_matrix_text(text: str) -> Graph:
    """Parse the matrix format into a validated Graph."""
    tokens = " ".join(_content_lines(text)).split()
    if not tokens:
        raise MalformedInput("empty matrix input")
    try:
        n = int(tokens[0])
    except ValueError:
        raise MalformedInput(f"vertex count is not an integer: {tokens[0]!r}") from None
    if n < 1:
        raise MalformedInput(f"vertex count must be >= 1, got {n}")
    entries = tokens[1:]
    if len(entries) != n * n:
        raise MalformedInput(f"expected {n * n} matrix entries, found {len(entries)}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            token = entries[i * n + j]
            try:
                row.append(Weight.from_token(token))
            except ValueError:
                raise MalformedInput(
                    f"non-numeric token {token!r} at row {i + 1}, column {j + 1}"
                ) from None
        rows.append(tuple(row))
    return _raise_first_violation(Graph(n, tuple(rows)))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format into a validated Graph."""
    lines = _content_lines(text)
    if not lines:
        raise MalformedInput("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedInput(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedInput(f"header must be two integers, got {lines[0]!r}") from None
    if n < 1:
        raise MalformedInput(f"vertex count must be >= 1, got {n}")
    if m < 0:
        raise MalformedInput(f"edge count must be >= 0, got {m}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedInput(f"expected {m} edge lines, found {len(body)}")

    rows = [
        [Weight.zero() if i == j else INFINITY for j in range(n)]
        for i in range(n)
    ]
    seen: set[tuple[int, int]] = set()
    for line in body:
        parts = line.split()
        if len(parts) != 3:
            raise MalformedInput(f"edge line must be 'u v w', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(f"non-integer vertex in edge line {line!r}") from None
        try:
            w = Weight.finite(parts[2])
        except ValueError:
            raise MalformedInput(f"non-numeric weight in edge line {line!r}") from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 1..{n}")
        if u == v:
            raise SelfLoop(f"self loop at vertex {u}")
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u},{v}) listed twice")
        if w <= Weight.zero():
            raise NegativeOrZeroWeight(f"edge ({u},{v}) has non-positive weight {w}")
        seen.add((u, v))
        rows[u - 1][v - 1] = w
    return _raise_first_violation(Graph(n, tuple(tuple(row) for row in rows)))


def to_matrix_text(g: Graph) -> str:
    """Serialize in the matrix format; round-trips through parse_matrix_text."""
    lines = [str(g.n)]
    for i in g.vertices():
        lines.append(" ".join(str(w) for w in g.weights[i - 1]))
    return "\n".join(lines) + "\n"
