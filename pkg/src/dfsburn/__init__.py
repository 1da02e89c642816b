"""Burning bijection between graph parking functions and rooted spanning trees.

A depth-first burn assigns to every parking function of a connected simple
graph a spanning tree whose kappa-number is the circuit rank minus the
function's degree, and the traversal inverts.  The package also carries the
exhaustive desk-scale machinery used to validate this: subset-based parking
recognition, spanning-tree and Tutte-polynomial enumeration, and threshold
graphs built from dominating/isolated sequences.
"""

from .burn import (
    BurnResult,
    BurnTrace,
    Mark,
    TraceEntry,
    dfs_burn,
    dfs_tree,
    kernel_backend,
    parking_to_tree,
    trace_of,
    tree_to_parking,
)
from .errors import (
    BudgetExceededError,
    BuildSequenceError,
    DisconnectedGraphError,
    DomainMismatchError,
    DuplicateEdgeError,
    FormatError,
    GraphError,
    NotAParkingFunctionError,
    NotSpanningTreeError,
    RootMismatchError,
    SelfLoopError,
    VertexRangeError,
)
from .graph import Graph, degree_into_complement, format_edge_list, parse_edge_list
from .parking import (
    ParkingFunction,
    enumerate_parking_functions,
    is_parking_function_oracle,
)
from .threshold import (
    all_reverse_degree_labelings,
    build_threshold,
    check_inversion_equality,
    label_by_reverse_degree,
)
from .trees import (
    RootedTree,
    enumerate_spanning_trees,
    format_tree,
    inversions,
    kappa_inversions,
    kappa_number,
    parse_tree,
    spanning_tree_count,
)
from .tutte import (
    kappa_generating_function,
    pf_degree_generating_function,
    tutte_evaluate,
    tutte_one_y,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "BuildSequenceError",
    "BurnResult",
    "BurnTrace",
    "CheckResult",
    "DisconnectedGraphError",
    "DomainMismatchError",
    "DuplicateEdgeError",
    "FormatError",
    "Graph",
    "GraphError",
    "Mark",
    "NotAParkingFunctionError",
    "NotSpanningTreeError",
    "ParkingFunction",
    "RootMismatchError",
    "RootedTree",
    "SelfLoopError",
    "TraceEntry",
    "VertexRangeError",
    "all_reverse_degree_labelings",
    "build_threshold",
    "check_inversion_equality",
    "degree_into_complement",
    "dfs_burn",
    "dfs_tree",
    "enumerate_parking_functions",
    "enumerate_spanning_trees",
    "format_edge_list",
    "format_tree",
    "inversions",
    "is_parking_function_oracle",
    "kappa_generating_function",
    "kappa_inversions",
    "kappa_number",
    "kernel_backend",
    "label_by_reverse_degree",
    "parking_to_tree",
    "parse_edge_list",
    "parse_tree",
    "pf_degree_generating_function",
    "run_verification",
    "spanning_tree_count",
    "trace_of",
    "tree_to_parking",
    "tutte_evaluate",
    "tutte_one_y",
]
