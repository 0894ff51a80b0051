"""Label-setting machinery: relaxation, permanent selection, full traced runs.

A run alternates two moves until nothing settles: relax every temporary label
from the current frontier, then promote a batch of temporary labels to
permanent. The three selection strategies differ only in the batch:

* ``SINGLE_MIN``  - settle the lowest-id vertex holding the minimum temporary
  label (classic Dijkstra labeling; the id rule makes traces deterministic).
* ``TIE_BATCH``   - settle every vertex tied at the minimum.
* ``STABLE_BATCH`` - settle the minimum batch plus every finite temporary
  label the preceding relaxation failed to improve. Experimental: it can
  settle labels that are not yet optimal, so callers must oracle-check it
  (see the counterexample fixture).

Rounds are recorded with full label snapshots so runs can be replayed,
rendered, and regression-tested against golden traces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FrontierNotPermanent, VertexOutOfRange
from .graph import Graph, check_vertex
from .weights import INFINITY, Weight


class Status(enum.Enum):
    TEMPORARY = "temporary"
    PERMANENT = "permanent"


class Strategy(enum.Enum):
    SINGLE_MIN = "singlemin"
    TIE_BATCH = "tiebatch"
    STABLE_BATCH = "stablebatch"


class Algorithm(enum.Enum):
    CLASSIC = "classic"
    MODIFIED = "modified"


class LabelState:
    """Per-vertex label value, predecessor set, status, and settling round.

    Predecessors hold *all* minimizers seen so far: a strict improvement
    replaces the set, an equal-value alternative extends it. Confined to a
    single run; use :meth:`copy` for snapshots.
    """

    __slots__ = ("_values", "_preds", "_status", "_settled")

    def __init__(
        self,
        values: list[Weight],
        preds: list[set[int]],
        status: list[Status],
        settled: list[int | None],
    ):
        self._values = values
        self._preds = preds
        self._status = status
        self._settled = settled

    @classmethod
    def initial(cls, n: int, source: int) -> "LabelState":
        values = [INFINITY] * n
        preds: list[set[int]] = [set() for _ in range(n)]
        status = [Status.TEMPORARY] * n
        settled: list[int | None] = [None] * n
        values[source - 1] = Weight.zero()
        status[source - 1] = Status.PERMANENT
        settled[source - 1] = 0
        return cls(values, preds, status, settled)

    @property
    def n(self) -> int:
        return len(self._values)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def value(self, v: int) -> Weight:
        return self._values[v - 1]

    def predecessors(self, v: int) -> frozenset[int]:
        return frozenset(self._preds[v - 1])

    def status(self, v: int) -> Status:
        return self._status[v - 1]

    def is_permanent(self, v: int) -> bool:
        return self._status[v - 1] is Status.PERMANENT

    def settled_round(self, v: int) -> int | None:
        return self._settled[v - 1]

    def all_permanent(self) -> bool:
        return all(s is Status.PERMANENT for s in self._status)

    def permanent_vertices(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices() if self.is_permanent(v))

    def distances(self) -> tuple[Weight, ...]:
        return tuple(self._values)

    def copy(self) -> "LabelState":
        return LabelState(
            list(self._values),
            [set(p) for p in self._preds],
            list(self._status),
            list(self._settled),
        )

    def improve(self, v: int, value: Weight, preds: set[int]) -> None:
        """Strict improvement: new value, predecessor set replaced."""
        if self.is_permanent(v):
            raise ValueError(f"vertex {v} is already permanent")
        self._values[v - 1] = value
        self._preds[v - 1] = set(preds)

    def add_predecessors(self, v: int, preds: set[int]) -> None:
        """Equal-value alternatives: extend the predecessor set only."""
        if self.is_permanent(v):
            raise ValueError(f"vertex {v} is already permanent")
        self._preds[v - 1].update(preds)

    def settle(self, v: int, round_index: int) -> None:
        if self.is_permanent(v):
            raise ValueError(f"vertex {v} is already permanent")
        self._status[v - 1] = Status.PERMANENT
        self._settled[v - 1] = round_index

    def _max_settled_round(self) -> int:
        return max((r for r in self._settled if r is not None), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelState):
            return NotImplemented
        return (
            self._values == other._values
            and self._preds == other._preds
            and self._status == other._status
            and self._settled == other._settled
        )

    def __repr__(self) -> str:
        rows = ", ".join(
            f"{v}:[{self.value(v)},{sorted(self._preds[v - 1])},{self.status(v).value}]"
            for v in self.vertices()
        )
        return f"<LabelState {rows}>"


@dataclass(frozen=True)
class RoundRecord:
    """One relax-then-select repetition, with the post-selection snapshot."""

    round_index: int
    frontier: frozenset[int]
    label_snapshot: LabelState
    newly_permanent: frozenset[int]


@dataclass(frozen=True)
class RunTrace:
    """Complete record of one labeling run.

    ``rounds_count`` counts relax+select repetitions after source
    initialization; ``rounds_count_incl_source`` adds one for the
    initialization step, matching tools that display it as a first iteration.
    """

    algorithm: Algorithm
    strategy: Strategy
    source: int
    target: int | None
    rounds: tuple[RoundRecord, ...]
    final_labels: LabelState
    final_distances: tuple[Weight, ...]
    rounds_count: int
    rounds_count_incl_source: int
    terminated_early: bool


def init_labels(g: Graph, source: int) -> LabelState:
    """Source permanent at zero, every other vertex temporary at INFINITY."""
    check_vertex(g, source)
    return LabelState.initial(g.n, source)


def relax_step(
    g: Graph, labels: LabelState, frontier: frozenset[int] | set[int]
) -> tuple[LabelState, frozenset[int]]:
    """Relax every temporary label from the frontier.

    Returns a fresh LabelState (the input is untouched) and the set of
    vertices whose value strictly decreased. An equal-value path through a
    new frontier vertex extends the predecessor set without counting as a
    change. The result does not depend on frontier iteration order: every
    temporary vertex takes the minimum over the whole frontier at once.
    """
    for i in frontier:
        if not g.contains_vertex(i):
            raise VertexOutOfRange(f"frontier vertex {i} outside 1..{g.n}")
        if not labels.is_permanent(i):
            raise FrontierNotPermanent(f"frontier vertex {i} is not permanent")
    new = labels.copy()
    changed: set[int] = set()
    frontier_sorted = sorted(frontier)
    for j in g.vertices():
        if new.is_permanent(j):
            continue
        best: Weight | None = None
        minimizers: set[int] = set()
        for i in frontier_sorted:
            w = g.weight(i, j)
            if w.is_infinite:
                continue
            candidate = labels.value(i) + w
            if best is None or candidate < best:
                best = candidate
                minimizers = {i}
            elif candidate == best:
                minimizers.add(i)
        if best is None:
            continue
        old = new.value(j)
        if best < old:
            new.improve(j, best, minimizers)
            changed.add(j)
        elif best == old:
            new.add_predecessors(j, minimizers)
    return new, frozenset(changed)


def select_permanent(
    labels: LabelState, strategy: Strategy, changed: frozenset[int] | set[int]
) -> frozenset[int]:
    """Promote a batch of temporary labels to permanent, in place.

    Let m be the minimum finite temporary value. SINGLE_MIN settles the
    lowest-id vertex at m, TIE_BATCH every vertex at m, STABLE_BATCH every
    vertex at m plus each finite temporary vertex absent from ``changed``.
    Returns the settled set; empty (and no mutation) when no temporary label
    is finite, which signals exhaustion to the caller.
    """
    finite = [
        (labels.value(v), v)
        for v in labels.vertices()
        if not labels.is_permanent(v) and labels.value(v).is_finite
    ]
    if not finite:
        return frozenset()
    minimum = min(w for w, _ in finite)
    at_minimum = {v for w, v in finite if w == minimum}
    if strategy is Strategy.SINGLE_MIN:
        chosen = {min(at_minimum)}
    elif strategy is Strategy.TIE_BATCH:
        chosen = at_minimum
    elif strategy is Strategy.STABLE_BATCH:
        chosen = at_minimum | {v for _, v in finite if v not in changed}
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown strategy {strategy!r}")
    round_index = labels._max_settled_round() + 1
    for v in sorted(chosen):
        labels.settle(v, round_index)
    return frozenset(chosen)


def run_classic(
    g: Graph,
    source: int,
    target: int | None = None,
    stop_at_target: bool = False,
) -> RunTrace:
    """Classic single-settle labeling run with a full per-round trace."""
    return _run(g, source, target, stop_at_target, Strategy.SINGLE_MIN, Algorithm.CLASSIC)


def run_modified(
    g: Graph,
    source: int,
    target: int | None = None,
    stop_at_target: bool = False,
    strategy: Strategy = Strategy.TIE_BATCH,
) -> RunTrace:
    """Batched labeling run (TIE_BATCH or STABLE_BATCH) with a full trace."""
    if strategy not in (Strategy.TIE_BATCH, Strategy.STABLE_BATCH):
        raise ValueError(f"run_modified requires a batching strategy, got {strategy}")
    return _run(g, source, target, stop_at_target, strategy, Algorithm.MODIFIED)


def _run(
    g: Graph,
    source: int,
    target: int | None,
    stop_at_target: bool,
    strategy: Strategy,
    algorithm: Algorithm,
) -> RunTrace:
    check_vertex(g, source)
    if target is not None:
        check_vertex(g, target)
    labels = init_labels(g, source)
    rounds: list[RoundRecord] = []
    frontier: frozenset[int] = frozenset({source})
    terminated_early = False
    while True:
        if labels.all_permanent():
            break
        if stop_at_target and target is not None and labels.is_permanent(target):
            terminated_early = True
            break
        labels, changed = relax_step(g, labels, frontier)
        newly = select_permanent(labels, strategy, changed)
        if not newly:
            break
        rounds.append(
            RoundRecord(
                round_index=len(rounds) + 1,
                frontier=frontier,
                label_snapshot=labels.copy(),
                newly_permanent=newly,
            )
        )
        frontier = newly
    return RunTrace(
        algorithm=algorithm,
        strategy=strategy,
        source=source,
        target=target,
        rounds=tuple(rounds),
        final_labels=labels,
        final_distances=labels.distances(),
        rounds_count=len(rounds),
        rounds_count_incl_source=len(rounds) + 1,
        terminated_early=terminated_early,
    )
