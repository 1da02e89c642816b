"""Cross-module invariant checks run against a single graph.

Each check pits an exhaustive, definition-level computation against the
linear-time burning machinery; disagreement is reported, never patched
over.  Everything here assumes desk-scale graphs and respects the
enumeration budgets.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import NamedTuple

from .burn import dfs_burn, dfs_tree, parking_to_tree, trace_of, tree_to_parking
from .errors import BudgetExceededError, DisconnectedGraphError
from .graph import Graph, degree_into_complement
from .parking import (
    ENUMERATION_BUDGET,
    ParkingFunction,
    enumerate_parking_functions,
    is_parking_function_oracle,
)
from .trees import enumerate_spanning_trees, kappa_inversions, kappa_number
from .tutte import kappa_generating_function, pf_degree_generating_function, tutte_one_y


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def run_verification(
    g: Graph,
    *,
    max_edges: int | None = None,
    max_candidates: int = ENUMERATION_BUDGET,
) -> list[CheckResult]:
    """Run every invariant check on ``g`` and report one result per check."""
    tree_budget = {} if max_edges is None else {"max_edges": max_edges}
    results: list[CheckResult] = []
    rank = g.circuit_rank

    trees = enumerate_spanning_trees(g, **tree_budget)
    pfs = enumerate_parking_functions(g, max_candidates=max_candidates)
    results.append(
        CheckResult("tree-count-kirchhoff", True, f"{len(trees)} spanning trees")
    )
    results.append(
        _check("pf-count-matches-trees", len(pfs) == len(trees),
               f"{len(pfs)} parking functions vs {len(trees)} trees")
    )

    bad = [t for t in trees if parking_to_tree(g, tree_to_parking(g, t)[0]) != t]
    results.append(_check("roundtrip-tree", not bad, f"{len(bad)} trees fail"))

    bad = [p for p in pfs if tree_to_parking(g, parking_to_tree(g, p))[0] != p]
    results.append(_check("roundtrip-pf", not bad, f"{len(bad)} functions fail"))

    bad = [p for p in pfs if kappa_number(g, parking_to_tree(g, p)) != rank - p.degree]
    results.append(
        _check("kappa-equals-rank-minus-degree", not bad, f"{len(bad)} functions fail")
    )

    bad = [p for p in pfs if len(dfs_burn(g, p).dampened) != p.degree]
    results.append(
        _check("dampened-count-equals-degree", not bad, f"{len(bad)} functions fail")
    )

    bad_traces = 0
    for t in trees:
        pf, tree_trace = tree_to_parking(g, t)
        if trace_of(g, pf) != tree_trace:
            bad_traces += 1
    results.append(_check("trace-identity", bad_traces == 0, f"{bad_traces} trees fail"))

    one_y = tutte_one_y(g, **tree_budget)
    pf_gf = pf_degree_generating_function(g, max_candidates=max_candidates)
    kappa_gf = kappa_generating_function(g, **tree_budget)
    results.append(
        _check("merino-identity", tuple(reversed(pf_gf)) == one_y,
               f"reversed {pf_gf} vs {one_y}")
    )
    results.append(
        _check("gessel-identity", kappa_gf == one_y, f"{kappa_gf} vs {one_y}")
    )

    results.append(_oracle_agreement(g, max_candidates))

    results.append(
        _check("dfs-tree-kappa-equals-rank",
               kappa_number(g, dfs_tree(g)) == rank,
               f"kappa {kappa_number(g, dfs_tree(g))} vs rank {rank}")
    )
    results.append(_deleted_edge_check(g))
    return results


def _check(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, ok, detail if not ok else "")


def _oracle_agreement(g: Graph, max_candidates: int) -> CheckResult:
    """Burn success must match the subset oracle on every candidate vector.

    Candidates take every value 0..deg(v) per vertex; on rejection both
    certificates must be sound and identical.
    """
    verts = g.non_root_vertices
    ranges = [range(g.degree(v) + 1) for v in verts]
    if prod(len(r) for r in ranges) > max_candidates:
        raise BudgetExceededError(
            f"candidate space exceeds budget {max_candidates}"
        )
    failures = 0
    for vector in product(*ranges):
        p = ParkingFunction(g.root, vector)
        result = dfs_burn(g, p)
        accepted, witness = is_parking_function_oracle(g, p)
        if accepted != result.is_parking_function:
            failures += 1
            continue
        if not accepted:
            sound = all(
                p.value_at(j) >= degree_into_complement(g, j, result.unburnt)
                for j in result.unburnt
            )
            if not sound or witness != result.unburnt:
                failures += 1
    return _check("oracle-agreement", failures == 0, f"{failures} candidates disagree")


def _deleted_edge_check(g: Graph) -> CheckResult:
    """Deleting a DFS-tree edge (keeping connectivity) drops kappa by one.

    The reduced graph's DFS tree must have the same kappa-inversions whether
    measured in the original graph or the reduced one.
    """
    rank = g.circuit_rank
    base = dfs_tree(g)
    failures = 0
    tested = 0
    for parent_v, child_v in base.edges:
        try:
            h = g.remove_edge(parent_v, child_v)
        except DisconnectedGraphError:
            continue
        tested += 1
        t = dfs_tree(h)
        in_h = kappa_inversions(h, t)
        in_g = kappa_inversions(g, t)
        if in_h != in_g or len(in_h) != rank - 1:
            failures += 1
    return _check(
        "deleted-edge-kappa", failures == 0, f"{failures} of {tested} deletions fail"
    )
