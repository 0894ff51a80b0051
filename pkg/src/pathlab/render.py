"""Deterministic text and structured renderings of runs, trees, and reports.

The per-round trace table prints one row per vertex as
``node | [value, predecessor] | status`` with values to two decimals, ``-``
for the source predecessor, and blank label/status columns for vertices still
at INFINITY. The structured rendering is JSON carrying every round-record
field exactly (weights as exact strings), and round-trips via
:func:`trace_from_json`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bench import ComparisonRecord
from .labeling import (
    Algorithm,
    LabelState,
    RoundRecord,
    RunTrace,
    Status,
    Strategy,
)
from .oracle import OracleResult
from .tree import Route, TreeMatrix
from .weights import Weight


def two_decimals(w: Weight) -> str:
    """Exact two-decimal rendering of a finite weight (half-even rounding)."""
    scaled = round(w.fraction * 100)
    sign = "-" if scaled < 0 else ""
    return f"{sign}{abs(scaled) // 100}.{abs(scaled) % 100:02d}"


def display_predecessor(labels: LabelState, source: int, v: int) -> str:
    if v == source:
        return "-"
    preds = labels.predecessors(v)
    return str(min(preds)) if preds else "-"


def _vertex_set(vertices: frozenset[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


def _label_rows(labels: LabelState, source: int) -> list[str]:
    rows = ["node | label | status"]
    for v in labels.vertices():
        value = labels.value(v)
        if value.is_infinite:
            rows.append(f"{v:4d} |")
        else:
            label = f"[{two_decimals(value)}, {display_predecessor(labels, source, v)}]"
            rows.append(f"{v:4d} | {label} | {labels.status(v).value}")
    return rows


def render_trace_text(trace: RunTrace) -> str:
    """One block per round, mimicking iteration tables of labeling tools."""
    blocks = []
    for record in trace.rounds:
        lines = [
            f"Round {record.round_index}"
            f"  frontier={_vertex_set(record.frontier)}"
            f"  newly permanent={_vertex_set(record.newly_permanent)}"
        ]
        lines.extend(_label_rows(record.label_snapshot, trace.source))
        blocks.append("\n".join(lines))
    summary = (
        f"rounds: {trace.rounds_count}"
        f" (including source initialization: {trace.rounds_count_incl_source})"
    )
    return "\n\n".join(blocks + [summary]) + "\n"


def _labels_to_list(labels: LabelState) -> list[dict]:
    return [
        {
            "vertex": v,
            "value": str(labels.value(v)),
            "predecessors": sorted(labels.predecessors(v)),
            "status": labels.status(v).value,
            "settled_round": labels.settled_round(v),
        }
        for v in labels.vertices()
    ]


def _labels_from_list(items: list[dict]) -> LabelState:
    n = len(items)
    values = [Weight.from_token(item["value"]) for item in items]
    preds = [set(item["predecessors"]) for item in items]
    status = [Status(item["status"]) for item in items]
    settled = [item["settled_round"] for item in items]
    state = LabelState(values, preds, status, settled)
    assert state.n == n
    return state


def trace_to_dict(trace: RunTrace) -> dict:
    return {
        "algorithm": trace.algorithm.value,
        "strategy": trace.strategy.value,
        "source": trace.source,
        "target": trace.target,
        "rounds": [
            {
                "round_index": record.round_index,
                "frontier": sorted(record.frontier),
                "newly_permanent": sorted(record.newly_permanent),
                "labels": _labels_to_list(record.label_snapshot),
            }
            for record in trace.rounds
        ],
        "final_labels": _labels_to_list(trace.final_labels),
        "final_distances": [str(w) for w in trace.final_distances],
        "rounds_count": trace.rounds_count,
        "rounds_count_incl_source": trace.rounds_count_incl_source,
        "terminated_early": trace.terminated_early,
    }


def trace_from_dict(data: dict) -> RunTrace:
    rounds = tuple(
        RoundRecord(
            round_index=item["round_index"],
            frontier=frozenset(item["frontier"]),
            label_snapshot=_labels_from_list(item["labels"]),
            newly_permanent=frozenset(item["newly_permanent"]),
        )
        for item in data["rounds"]
    )
    final_labels = _labels_from_list(data["final_labels"])
    return RunTrace(
        algorithm=Algorithm(data["algorithm"]),
        strategy=Strategy(data["strategy"]),
        source=data["source"],
        target=data["target"],
        rounds=rounds,
        final_labels=final_labels,
        final_distances=tuple(Weight.from_token(t) for t in data["final_distances"]),
        rounds_count=data["rounds_count"],
        rounds_count_incl_source=data["rounds_count_incl_source"],
        terminated_early=data["terminated_early"],
    )


def trace_to_json(trace: RunTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2) + "\n"


def trace_from_json(text: str) -> RunTrace:
    return trace_from_dict(json.loads(text))


def render_tree_matrix(t: TreeMatrix) -> str:
    """Matrix-format rendering: n, then rows of weights with 0 for no link."""
    lines = [str(t.n)]
    for u in range(1, t.n + 1):
        lines.append(" ".join(str(t.weight(u, v)) for v in range(1, t.n + 1)))
    return "\n".join(lines) + "\n"


def render_route(route: Route) -> str:
    return str(route)


def render_oracle_text(result: OracleResult) -> str:
    lines = [f"method: {result.method.value}"]
    for v, w in enumerate(result.distances, start=1):
        lines.append(f"{v:4d} | {w}")
    return "\n".join(lines) + "\n"


def render_comparison_text(record: ComparisonRecord) -> str:
    lines = [
        f"source: {record.source}"
        + (f"  target: {record.target}" if record.target is not None else ""),
        "oracle (bellman-ford): " + " ".join(str(w) for w in record.oracle_distances),
        "strategy    | rounds | rounds_incl_source | agrees_oracle",
    ]
    for result in record.results:
        lines.append(
            f"{result.strategy.value:<11} | {result.rounds_count:6d} |"
            f" {result.rounds_count_incl_source:18d} |"
            f" {'true' if result.agrees_oracle else 'false'}"
        )
    lines.append(
        "stable_batch_unsound: "
        + ("true" if record.stable_batch_unsound else "false")
    )
    return "\n".join(lines) + "\n"


def mean_str(value: Fraction) -> str:
    """Fixed six-decimal rendering of an exact mean, for report summaries."""
    scaled = round(value * 1_000_000)
    return f"{scaled // 1_000_000}.{scaled % 1_000_000:06d}"
