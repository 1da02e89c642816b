"""Shared fixtures: the worked five-vertex example graph and small-graph pools."""

from itertools import combinations

import pytest

from dfsburn import Graph

HOUSE_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)]

# The complete tree/kappa/parking-function table of the house graph, worked
# out by hand: kappa values were recomputed both by direct inversion scans
# and as circuit_rank - degree.  Trees are in `parent>child` text form.
HOUSE_TABLE = [
    ("0>2,2>4,3>1,4>3", 2, (0, 0, 0, 0)),
    ("0>2,2>3,3>1,3>4", 1, (0, 0, 0, 1)),
    ("0>2,2>3,2>4,3>1", 1, (0, 0, 1, 0)),
    ("0>1,1>3,3>4,4>2", 1, (0, 1, 0, 0)),
    ("0>1,0>2,2>4,4>3", 1, (1, 0, 0, 0)),
    ("0>1,0>2,1>3,3>4", 0, (0, 0, 1, 1)),
    ("0>1,0>2,2>3,2>4", 0, (1, 0, 1, 0)),
    ("0>1,0>2,2>3,3>4", 0, (1, 0, 0, 1)),
    ("0>1,1>3,2>4,3>2", 0, (0, 1, 0, 1)),
    ("0>1,1>3,3>2,3>4", 0, (0, 2, 0, 0)),
    ("0>1,0>2,1>3,2>4", 0, (0, 0, 2, 0)),
]


@pytest.fixture
def house() -> Graph:
    """Five-vertex graph with circuit rank 2 used throughout the worked examples."""
    return Graph(5, HOUSE_EDGES, root=0)


@pytest.fixture
def k2() -> Graph:
    return Graph(2, [(0, 1)], root=0)


@pytest.fixture
def triangle() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


def connected_labeled_graphs(n: int):
    """Yield every connected labeled graph on vertices 0..n-1."""
    all_edges = list(combinations(range(n), 2))
    for mask in range(1 << len(all_edges)):
        edges = [all_edges[k] for k in range(len(all_edges)) if mask >> k & 1]
        if len(edges) < n - 1:
            continue
        if _connected(n, edges):
            yield Graph(n, edges, root=0)


def _connected(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            merges += 1
    return merges == n - 1
