"""Label-setting shortest-path laboratory.

Classic single-settle and tie-batched permanent labeling with full per-round
traces, shortest-path-tree extraction, two independent oracles, and a seeded
benchmark harness comparing iteration counts across selection strategies.
"""

from .bench import (
    ComparisonRecord,
    GraphSpec,
    RunReport,
    StrategyAggregate,
    StrategyResult,
    compare,
    compute_aggregates,
    generate_graph,
    report_to_csv,
    report_to_json,
    run_suite,
)
from .errors import (
    DiagonalNonZero,
    DuplicateEdge,
    FrontierNotPermanent,
    GraphTooLarge,
    MalformedInput,
    NegativeOrZeroWeight,
    PathlabError,
    SelfLoop,
    UnsettledVertex,
    VertexOutOfRange,
)
from .graph import (
    Graph,
    Violation,
    parse_edge_list,
    parse_matrix_text,
    to_matrix_text,
    validate,
)
from .labeling import (
    Algorithm,
    LabelState,
    RoundRecord,
    RunTrace,
    Status,
    Strategy,
    init_labels,
    relax_step,
    run_classic,
    run_modified,
    select_permanent,
)
from .oracle import (
    MAX_ENUMERATION_VERTICES,
    OracleMethod,
    OracleResult,
    bellman_ford,
    enumerate_min_path,
)
from .tree import Route, TreeMatrix, build_tree_matrix, extract_path
from .weights import INFINITY, Weight, saturating_add

__all__ = [
    "Algorithm",
    "ComparisonRecord",
    "DiagonalNonZero",
    "DuplicateEdge",
    "FrontierNotPermanent",
    "Graph",
    "GraphSpec",
    "GraphTooLarge",
    "INFINITY",
    "LabelState",
    "MAX_ENUMERATION_VERTICES",
    "MalformedInput",
    "NegativeOrZeroWeight",
    "OracleMethod",
    "OracleResult",
    "PathlabError",
    "RoundRecord",
    "Route",
    "RunReport",
    "RunTrace",
    "SelfLoop",
    "Status",
    "Strategy",
    "StrategyAggregate",
    "StrategyResult",
    "TreeMatrix",
    "UnsettledVertex",
    "VertexOutOfRange",
    "Violation",
    "Weight",
    "bellman_ford",
    "build_tree_matrix",
    "compare",
    "compute_aggregates",
    "enumerate_min_path",
    "extract_path",
    "generate_graph",
    "init_labels",
    "parse_edge_list",
    "parse_matrix_text",
    "relax_step",
    "report_to_csv",
    "report_to_json",
    "run_classic",
    "run_modified",
    "run_suite",
    "saturating_add",
    "select_permanent",
    "to_matrix_text",
    "validate",
]
