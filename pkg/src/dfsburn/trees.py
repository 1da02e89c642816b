"""Rooted spanning trees, inversion statistics, and exhaustive enumeration.

A tree is a parent map on the non-root vertices with all edges directed
away from the root.  The enumeration here filters edge subsets and is an
oracle for small graphs; its count is cross-checked against the Kirchhoff
determinant of the reduced Laplacian, computed in exact integer arithmetic.
"""

from __future__ import annotations

from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    BudgetExceededError,
    FormatError,
    NotSpanningTreeError,
    RootMismatchError,
    VertexRangeError,
)
from .graph import Edge, Graph

TREE_EDGE_BUDGET = 24

InversionPair = tuple[int, int]


class RootedTree:
    """Spanning tree stored as a parent map, edges directed away from the root."""

    __slots__ = ("root", "_parent", "_hash")

    def __init__(self, root: int, parent: Mapping[int, int]):
        parent = dict(parent)
        n = len(parent) + 1
        if not 0 <= root < n:
            raise VertexRangeError(f"root {root} out of range for {n} vertices")
        if set(parent) | {root} != set(range(n)):
            raise NotSpanningTreeError("parent map must cover exactly the non-root vertices")
        # every chain must reach the root without revisiting a vertex
        state = bytearray(n)  # 0 unknown, 1 on current chain, 2 verified
        state[root] = 2
        for v in range(n):
            chain = []
            w = v
            while state[w] == 0:
                state[w] = 1
                chain.append(w)
                w = parent[w]
                if not 0 <= w < n:
                    raise VertexRangeError(f"parent {w} out of range")
                if state[w] == 1:
                    raise NotSpanningTreeError(f"cycle through vertex {w}")
            for u in chain:
                state[u] = 2
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_parent", MappingProxyType(parent))
        object.__setattr__(self, "_hash", hash((root, frozenset(parent.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("RootedTree is immutable")

    @classmethod
    def from_edge_set(cls, root: int, edges: Iterable[Edge], n_vertices: int) -> "RootedTree":
        """Orient an undirected spanning-tree edge set away from ``root``."""
        nbrs: list[list[int]] = [[] for _ in range(n_vertices)]
        count = 0
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
            count += 1
        if count != n_vertices - 1:
            raise NotSpanningTreeError(f"{count} edges cannot span {n_vertices} vertices")
        parent: dict[int, int] = {}
        stack = [root]
        seen = bytearray(n_vertices)
        seen[root] = 1
        while stack:
            v = stack.pop()
            for u in nbrs[v]:
                if not seen[u]:
                    seen[u] = 1
                    parent[u] = v
                    stack.append(u)
        if len(parent) != n_vertices - 1:
            raise NotSpanningTreeError("edge set does not reach every vertex")
        return cls(root, parent)

    @property
    def parent(self) -> Mapping[int, int]:
        return self._parent

    @property
    def n_vertices(self) -> int:
        return len(self._parent) + 1

    @property
    def vertices(self) -> tuple[int, ...]:
        """Non-root vertices, ascending."""
        return tuple(sorted(self._parent))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Directed edges (parent, child) sorted by (parent, child)."""
        return tuple(sorted((p, c) for c, p in self._parent.items()))

    def parent_of(self, v: int) -> int:
        return self._parent[v]

    def is_ancestor(self, i: int, j: int) -> bool:
        """True when ``i`` lies strictly above ``j`` on the root-to-``j`` path."""
        if i == j:
            return False
        if not (0 <= i < self.n_vertices and 0 <= j < self.n_vertices):
            raise VertexRangeError(f"vertex out of range: ({i}, {j})")
        w = j
        while w != self.root:
            w = self._parent[w]
            if w == i:
                return True
        return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.root == other.root and dict(self._parent) == dict(other._parent)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RootedTree({format_tree(self)!r}, root={self.root})"


def format_tree(t: RootedTree) -> str:
    """``parent>child`` pairs, comma separated, sorted by (parent, child)."""
    return ",".join(f"{p}>{c}" for p, c in t.edges)


def parse_tree(text: str, *, n_vertices: int, root: int) -> RootedTree:
    """Parse the ``parent>child`` comma-separated format against a known graph size."""
    parent: dict[int, int] = {}
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        head, sep, tail = token.partition(">")
        if not sep:
            raise FormatError(f"malformed tree edge {token!r}")
        try:
            p, c = int(head), int(tail)
        except ValueError:
            raise FormatError(f"malformed tree edge {token!r}") from None
        if c in parent:
            raise NotSpanningTreeError(f"vertex {c} has two parents")
        if c == root:
            raise RootMismatchError(f"root {root} appears as a child")
        parent[c] = p
    if set(parent) != set(range(n_vertices)) - {root}:
        raise NotSpanningTreeError(
            f"tree does not cover all {n_vertices - 1} non-root vertices"
        )
    return RootedTree(root, parent)


def check_spans(g: Graph, t: RootedTree) -> None:
    """Raise unless ``t`` is a spanning tree of ``g`` rooted at ``g.root``."""
    if t.root != g.root:
        raise RootMismatchError(f"tree root {t.root} differs from graph root {g.root}")
    if t.n_vertices != g.n_vertices:
        raise NotSpanningTreeError(
            f"tree has {t.n_vertices} vertices, graph has {g.n_vertices}"
        )
    for c, p in t.parent.items():
        if not g.has_edge(p, c):
            raise NotSpanningTreeError(f"tree edge ({p}, {c}) is not a graph edge")


def inversions(g: Graph, t: RootedTree) -> list[InversionPair]:
    """All pairs (i, j) with i an ancestor of j and i > j, sorted."""
    check_spans(g, t)
    pairs = []
    for j in t.vertices:
        i = t.parent_of(j)
        while True:
            if i > j:
                pairs.append((i, j))
            if i == t.root:
                break
            i = t.parent_of(i)
    pairs.sort()
    return pairs


def kappa_inversions(g: Graph, t: RootedTree) -> list[InversionPair]:
    """Inversions (i, j) with i not the root and i's parent adjacent to j."""
    return [
        (i, j)
        for i, j in inversions(g, t)
        if i != t.root and g.has_edge(t.parent_of(i), j)
    ]


def kappa_number(g: Graph, t: RootedTree) -> int:
    return len(kappa_inversions(g, t))


def spanning_tree_count(g: Graph) -> int:
    """Kirchhoff count: determinant of the root-reduced Laplacian."""
    verts = g.non_root_vertices
    pos = {v: k for k, v in enumerate(verts)}
    k = len(verts)
    m = [[0] * k for _ in range(k)]
    for u, v in g.edges:
        if u != g.root and v != g.root:
            m[pos[u]][pos[v]] -= 1
            m[pos[v]][pos[u]] -= 1
        if u != g.root:
            m[pos[u]][pos[u]] += 1
        if v != g.root:
            m[pos[v]][pos[v]] += 1
    return _bareiss_determinant(m)


def _bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free integer Gaussian elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def enumerate_spanning_trees(g: Graph, *, max_edges: int = TREE_EDGE_BUDGET) -> list[RootedTree]:
    """All spanning trees of ``g``, rooted at ``g.root``.

    Edge subsets are tested in lexicographic order of the sorted edge list,
    which fixes the output order.  The count is always verified against the
    Kirchhoff determinant.
    """
    if g.num_edges > max_edges:
        raise BudgetExceededError(
            f"{g.num_edges} edges exceed the enumeration budget {max_edges}"
        )
    n = g.n_vertices
    trees = []
    for combo in combinations(g.edges, n - 1):
        if _is_forest(combo, n):
            trees.append(RootedTree.from_edge_set(g.root, combo, n))
    expected = spanning_tree_count(g)
    if len(trees) != expected:
        raise RuntimeError(
            f"enumeration found {len(trees)} trees but the Kirchhoff count is {expected}"
        )
    return trees


def _is_forest(edges: Iterable[Edge], n: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True
