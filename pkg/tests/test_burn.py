import pytest

import dfsburn.burn as burn_module
from dfsburn import (
    DomainMismatchError,
    Graph,
    Mark,
    NotAParkingFunctionError,
    NotSpanningTreeError,
    ParkingFunction,
    RootMismatchError,
    RootedTree,
    degree_into_complement,
    dfs_burn,
    dfs_tree,
    enumerate_parking_functions,
    enumerate_spanning_trees,
    parking_to_tree,
    parse_tree,
    trace_of,
    tree_to_parking,
)
from dfsburn import _burn_py

from conftest import HOUSE_TABLE


def entries(trace):
    return [(e.tail, e.head, e.mark.value) for e in trace]


def test_walkthrough_burn(house):
    p = ParkingFunction(0, (0, 0, 1, 0))
    result = dfs_burn(house, p)
    assert result.is_parking_function
    assert result.tree == RootedTree(0, {2: 0, 4: 2, 3: 2, 1: 3})
    assert result.dampened == ((4, 3),)
    assert result.burnt == (0, 2, 4, 3, 1)
    assert entries(result.trace) == [
        (0, 2, "tree"),
        (2, 4, "tree"),
        (4, 3, "dampened"),
        (2, 3, "tree"),
        (3, 1, "tree"),
    ]
    # exactly deg(p) dampened edges
    assert len(result.dampened) == p.degree


def test_zero_function_burn(house):
    result = dfs_burn(house, ParkingFunction.zero(house))
    assert result.tree == RootedTree(0, {2: 0, 4: 2, 3: 4, 1: 3})
    assert result.dampened == ()
    assert all(e.mark is Mark.TREE for e in result.trace)


def test_certificate_burn(house):
    p = ParkingFunction(0, (0, 0, 2, 2))
    result = dfs_burn(house, p)
    assert not result.is_parking_function
    assert result.tree is None
    assert result.unburnt == frozenset({3, 4})
    assert result.burnt == (0, 2, 1)
    assert entries(result.trace) == [
        (0, 2, "tree"),
        (2, 4, "dampened"),
        (2, 3, "dampened"),
        (0, 1, "tree"),
        (1, 3, "dampened"),
    ]
    # certificate soundness against the original (unmutated) values
    for j in result.unburnt:
        assert p.value_at(j) >= degree_into_complement(house, j, result.unburnt)


def test_input_never_mutated(house):
    p = ParkingFunction(0, (0, 0, 2, 2))
    dfs_burn(house, p)
    assert p.values == (0, 0, 2, 2)
    q = ParkingFunction(0, (0, 0, 1, 0))
    dfs_burn(house, q)
    assert q.values == (0, 0, 1, 0)


def test_parking_to_tree_examples(house):
    assert parking_to_tree(house, ParkingFunction(0, (1, 0, 0, 0))) == RootedTree(
        0, {1: 0, 2: 0, 4: 2, 3: 4}
    )
    assert parking_to_tree(house, ParkingFunction(0, (0, 1, 0, 1))) == RootedTree(
        0, {1: 0, 3: 1, 2: 3, 4: 2}
    )


def test_parking_to_tree_raises_with_certificate(house):
    with pytest.raises(NotAParkingFunctionError) as exc:
        parking_to_tree(house, ParkingFunction(0, (0, 0, 2, 2)))
    assert exc.value.certificate == frozenset({3, 4})


def test_dfs_tree_examples(house, k2):
    assert dfs_tree(house) == RootedTree(0, {2: 0, 4: 2, 3: 4, 1: 3})
    assert dfs_tree(k2) == RootedTree(0, {1: 0})
    star = Graph(6, [(0, v) for v in range(1, 6)], root=0)
    assert dfs_tree(star) == RootedTree(0, {v: 0 for v in range(1, 6)})


def test_tree_to_parking_examples(house, k2):
    pf, _ = tree_to_parking(house, RootedTree(0, {2: 0, 4: 2, 3: 2, 1: 3}))
    assert pf.values == (0, 0, 1, 0)
    pf, _ = tree_to_parking(house, RootedTree(0, {1: 0, 2: 0, 3: 1, 4: 2}))
    assert pf.values == (0, 0, 2, 0)
    pf, _ = tree_to_parking(k2, RootedTree(0, {1: 0}))
    assert pf.values == (0,)


def test_tree_to_parking_errors(house):
    with pytest.raises(RootMismatchError):
        tree_to_parking(house, RootedTree(1, {0: 1, 2: 0, 3: 2, 4: 3}))
    with pytest.raises(NotSpanningTreeError):
        tree_to_parking(house, RootedTree(0, {1: 0, 2: 1, 3: 2, 4: 3}))  # (1,2) not an edge
    with pytest.raises(NotSpanningTreeError):
        tree_to_parking(house, RootedTree(0, {1: 0, 2: 0}))


def test_trace_identity_on_all_house_trees(house):
    # the list of marked edges from a tree equals the list from its function
    for t in enumerate_spanning_trees(house):
        pf, tree_trace = tree_to_parking(house, t)
        assert trace_of(house, pf) == tree_trace


def test_house_table_bijection(house):
    for text, kappa, vector in HOUSE_TABLE:
        t = parse_tree(text, n_vertices=5, root=0)
        pf, _ = tree_to_parking(house, t)
        assert pf.values == vector, text
        assert parking_to_tree(house, pf) == t
        assert house.circuit_rank - pf.degree == kappa


def test_round_trips_exhaustive(house):
    for t in enumerate_spanning_trees(house):
        assert parking_to_tree(house, tree_to_parking(house, t)[0]) == t
    for p in enumerate_parking_functions(house):
        assert tree_to_parking(house, parking_to_tree(house, p))[0] == p


def test_domain_mismatch(house):
    with pytest.raises(DomainMismatchError):
        dfs_burn(house, ParkingFunction(0, (0, 0, 0)))
    with pytest.raises(DomainMismatchError):
        dfs_burn(house, ParkingFunction(1, (0, 0, 0, 0)))


def test_trace_api(house):
    trace = trace_of(house, ParkingFunction(0, (0, 0, 1, 0)))
    assert len(trace) == 5
    assert trace[0] == (0, 2, Mark.TREE)
    assert trace[-1] == (3, 1, Mark.TREE)
    with pytest.raises(IndexError):
        trace[5]
    with pytest.raises(TypeError):
        trace[1:3]
    assert trace.dampened_edges() == ((4, 3),)
    assert trace.dampened_into(3) == 1
    assert trace.dampened_into(1) == 0
    assert trace == trace_of(house, ParkingFunction(0, (0, 0, 1, 0)))
    assert trace != trace_of(house, ParkingFunction.zero(house))
    assert "(0,2)" in repr(trace)


def test_dampened_head_counts_match_values(house):
    # on success each vertex dampens exactly its value
    for p in enumerate_parking_functions(house):
        trace = trace_of(house, p)
        for v in p.vertices:
            assert trace.dampened_into(v) == p.value_at(v)


def test_deep_path_does_not_recurse():
    n = 100_000
    g = Graph.path(n)
    result = dfs_burn(g, ParkingFunction.zero(g))
    assert result.is_parking_function
    assert len(result.burnt) == n


def test_first_dampened_edge_lies_in_dfs_tree():
    import random

    rng = random.Random(20260809)
    for _ in range(60):
        n = rng.randint(3, 9)
        edges = {(rng.randint(0, v - 1), v) for v in range(1, n)}
        extra = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for e in rng.sample(extra, k=min(len(extra), rng.randint(0, 6))):
            edges.add(e)
        g = Graph(n, sorted({(min(u, v), max(u, v)) for u, v in edges}), root=0)
        p = ParkingFunction(0, [rng.randint(0, 3) for _ in range(n - 1)])
        damp = dfs_burn(g, p).dampened
        if not damp:
            continue
        i, j = damp[0]
        assert dfs_tree(g).parent_of(j) == i


def test_backends_agree(house, k4):
    if burn_module.kernel_backend() == "python":
        pytest.skip("compiled kernel not built")
    graphs = [house, k4, Graph.path(6), house.with_root(3)]
    cases = []
    for g in graphs:
        for p in enumerate_parking_functions(g):
            cases.append((g, p))
        worst = ParkingFunction(g.root, [g.degree(v) for v in g.non_root_vertices])
        cases.append((g, worst))
    compiled = [dfs_burn(g, p) for g, p in cases]
    real_kernel = burn_module._KERNEL
    burn_module._KERNEL = _burn_py
    try:
        pure = [dfs_burn(g, p) for g, p in cases]
    finally:
        burn_module._KERNEL = real_kernel
    for a, b in zip(compiled, pure):
        assert a.burnt == b.burnt
        assert a.tree == b.tree
        assert a.dampened == b.dampened
        assert a.unburnt == b.unburnt
        assert a.trace == b.trace

    tree_cases = [(g, t) for g in (house, k4) for t in enumerate_spanning_trees(g)]
    compiled_inv = [tree_to_parking(g, t) for g, t in tree_cases]
    burn_module._KERNEL = _burn_py
    try:
        pure_inv = [tree_to_parking(g, t) for g, t in tree_cases]
    finally:
        burn_module._KERNEL = real_kernel
    assert compiled_inv == pure_inv
