"""Threshold graphs: build sequences, reverse-degree labelings, inversion checks.

A build sequence is ``*`` followed by letters ``d`` (add a vertex adjacent
to everything so far) and ``i`` (add a vertex adjacent to nothing).  The
result is connected exactly when the final letter is ``d``.  Suitably
labeled, these graphs make every tree inversion a kappa-inversion.
"""

from __future__ import annotations

from itertools import groupby, permutations, product

from .errors import BudgetExceededError, BuildSequenceError, DisconnectedGraphError
from .graph import Graph
from .trees import (
    InversionPair,
    RootedTree,
    enumerate_spanning_trees,
    inversions,
    kappa_inversions,
)

LABELING_VERTEX_BOUND = 8


def build_threshold(sequence: str) -> Graph:
    """Construct the threshold graph of a build sequence.

    Vertex k is the one added at step k, so labels follow construction
    order; the returned root is 0 as a placeholder (use
    :func:`label_by_reverse_degree` for the canonical rooted labeling).
    """
    if not sequence or sequence[0] != "*":
        raise BuildSequenceError("build sequence must start with '*'")
    body = sequence[1:]
    bad = set(body) - {"d", "i"}
    if bad:
        raise BuildSequenceError(f"invalid symbols {sorted(bad)}; only 'd' and 'i' allowed")
    if body and body[-1] != "d":
        raise DisconnectedGraphError(
            "build sequence must end with 'd' to give a connected graph"
        )
    edges = []
    for k, symbol in enumerate(body, start=1):
        if symbol == "d":
            edges.extend((j, k) for j in range(k))
    return Graph(len(body) + 1, edges, root=0)


def _relabel(g: Graph, new_label: dict[int, int]) -> Graph:
    return Graph(g.n_vertices, [(new_label[u], new_label[v]) for u, v in g.edges], root=0)


def label_by_reverse_degree(g: Graph) -> Graph:
    """Relabel so degrees weakly decrease with the label; root becomes 0.

    Degree ties break by original label (construction order for built
    threshold graphs).  All tie choices give the same labeled graph for
    threshold graphs; :func:`all_reverse_degree_labelings` enumerates them
    anyway.
    """
    order = sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))
    return _relabel(g, {old: new for new, old in enumerate(order)})


def all_reverse_degree_labelings(
    g: Graph, *, max_vertices: int = LABELING_VERTEX_BOUND
) -> list[Graph]:
    """Every labeling with weakly decreasing degrees, one graph per labeling.

    The number of labelings is the product of the factorials of the
    degree-class sizes; distinct labelings may coincide as labeled graphs.
    """
    if g.n_vertices > max_vertices:
        raise BudgetExceededError(
            f"{g.n_vertices} vertices exceed the labeling bound {max_vertices}"
        )
    by_degree = sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))
    groups = [list(grp) for _, grp in groupby(by_degree, key=g.degree)]
    offsets = []
    base = 0
    for grp in groups:
        offsets.append(base)
        base += len(grp)
    labelings = []
    for perms in product(*(permutations(grp) for grp in groups)):
        mapping = {}
        for grp_perm, off in zip(perms, offsets):
            for slot, old in enumerate(grp_perm):
                mapping[old] = off + slot
        labelings.append(_relabel(g, mapping))
    return labelings


def check_inversion_equality(
    g: Graph, **budget
) -> tuple[bool, tuple[RootedTree, InversionPair] | None]:
    """Do all spanning trees of ``g`` have inversions == kappa-inversions?

    On failure returns the first counterexample, ordered by (pair, tree
    parent vector) so the answer does not depend on enumeration order.
    """
    best_key = None
    best = None
    for t in enumerate_spanning_trees(g, **budget):
        kappa = set(kappa_inversions(g, t))
        for pair in inversions(g, t):
            if pair not in kappa:
                key = (pair, tuple(t.parent_of(v) for v in t.vertices))
                if best_key is None or key < best_key:
                    best_key = key
                    best = (t, pair)
    if best is not None:
        return False, best
    return True, None
