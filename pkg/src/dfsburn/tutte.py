"""Tutte polynomial along x=1 and the generating-function identities.

Evaluation sums over all edge subsets, straight from the definition, with
exact integer arithmetic throughout.  The subset sum doubles as the oracle
side of the identities: T(1, y) must equal both the spanning-tree count by
kappa-number and the reversed count of parking functions by degree.
"""

from __future__ import annotations

from math import comb

from .errors import BudgetExceededError
from .graph import Graph
from .parking import enumerate_parking_functions
from .trees import enumerate_spanning_trees, kappa_number

SUBSET_EDGE_BUDGET = 24

# Coefficient vectors are plain integer tuples indexed by degree 0..g.


def _component_count(n: int, edge_list, mask: int) -> int:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    c = n
    k = 0
    while mask:
        if mask & 1:
            u, v = edge_list[k]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                c -= 1
        mask >>= 1
        k += 1
    return c


def tutte_evaluate(g: Graph, x: int, y: int, *, max_edges: int = SUBSET_EDGE_BUDGET) -> int:
    """Exact subset-sum evaluation of the Tutte polynomial at integers (x, y)."""
    m = g.num_edges
    if m > max_edges:
        raise BudgetExceededError(f"{m} edges exceed the subset budget {max_edges}")
    n = g.n_vertices
    edge_list = g.edges
    total = 0
    for mask in range(1 << m):
        c = _component_count(n, edge_list, mask)
        size = mask.bit_count()
        total += (x - 1) ** (c - 1) * (y - 1) ** (c + size - n)
    return total


def tutte_one_y(g: Graph, *, max_edges: int = SUBSET_EDGE_BUDGET) -> tuple[int, ...]:
    """Coefficients a_0..a_g of T(G, 1, y).

    At x = 1 only connected edge subsets survive, each contributing
    (y-1)^(|A| - |V| + 1); the expansion is accumulated exactly.
    """
    m = g.num_edges
    if m > max_edges:
        raise BudgetExceededError(f"{m} edges exceed the subset budget {max_edges}")
    n = g.n_vertices
    edge_list = g.edges
    coeffs = [0] * (g.circuit_rank + 1)
    for mask in range(1 << m):
        if _component_count(n, edge_list, mask) != 1:
            continue
        k = mask.bit_count() - (n - 1)
        for t in range(k + 1):
            coeffs[t] += comb(k, t) * (-1) ** (k - t)
    return tuple(coeffs)


def pf_degree_generating_function(g: Graph, **budget) -> tuple[int, ...]:
    """Coefficient d: number of parking functions of degree d."""
    coeffs = [0] * (g.circuit_rank + 1)
    for p in enumerate_parking_functions(g, **budget):
        coeffs[p.degree] += 1
    return tuple(coeffs)


def kappa_generating_function(g: Graph, **budget) -> tuple[int, ...]:
    """Coefficient i: number of spanning trees with kappa-number i."""
    coeffs = [0] * (g.circuit_rank + 1)
    for t in enumerate_spanning_trees(g, **budget):
        coeffs[kappa_number(g, t)] += 1
    return tuple(coeffs)
