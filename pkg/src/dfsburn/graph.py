"""Connected simple labeled graphs with a distinguished root vertex.

Vertices are dense integer labels 0..n-1.  Every neighbour list is stored
sorted in descending order; all traversals in this package iterate
neighbours from the largest label to the smallest, and rely on that order
being fixed at construction time.
"""

from __future__ import annotations

from array import array
from typing import Iterable

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


class Graph:
    """Immutable connected simple graph rooted at ``root``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    Instances hash and compare by ``(n_vertices, edges, root)``.
    """

    def __init__(self, n_vertices: int, edges: Iterable[Edge], root: int = 0):
        if n_vertices < 1:
            raise VertexRangeError("graph needs at least one vertex")
        if not 0 <= root < n_vertices:
            raise VertexRangeError(f"root {root} out of range 0..{n_vertices - 1}")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(n_vertices)]
        for u, v in edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{n_vertices - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        for lst in nbrs:
            lst.sort(reverse=True)
        self.n_vertices = n_vertices
        self.root = root
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self._nbrs = tuple(tuple(lst) for lst in nbrs)
        self._nbr_sets = tuple(frozenset(lst) for lst in nbrs)
        self._csr: tuple[array, array] | None = None
        self._check_connected()

    @classmethod
    def path(cls, n_vertices: int, root: int = 0) -> "Graph":
        return cls(n_vertices, [(i, i + 1) for i in range(n_vertices - 1)], root)

    @classmethod
    def complete(cls, n_vertices: int, root: int = 0) -> "Graph":
        edges = [(i, j) for i in range(n_vertices) for j in range(i + 1, n_vertices)]
        return cls(n_vertices, edges, root)

    def _check_connected(self) -> None:
        seen = bytearray(self.n_vertices)
        seen[self.root] = 1
        stack = [self.root]
        count = 1
        while stack:
            v = stack.pop()
            for u in self._nbrs[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        if count != self.n_vertices:
            raise DisconnectedGraphError(
                f"graph is disconnected ({count} of {self.n_vertices} vertices reachable)"
            )

    # -- elementary quantities ------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def circuit_rank(self) -> int:
        """Number of independent cycles: |E| - |V| + 1."""
        return self.num_edges - self.n_vertices + 1

    @property
    def non_root_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n_vertices) if v != self.root)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbours of ``v`` in descending label order."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def csr(self) -> tuple[array, array]:
        """Flattened adjacency (offsets, neighbours) for the burning kernels."""
        if self._csr is None:
            starts = array("i", [0] * (self.n_vertices + 1))
            for v in range(self.n_vertices):
                starts[v + 1] = starts[v] + len(self._nbrs[v])
            flat = array("i", [u for lst in self._nbrs for u in lst])
            self._csr = (starts, flat)
        return self._csr

    # -- derived graphs --------------------------------------------------------

    def with_root(self, root: int) -> "Graph":
        if root == self.root:
            return self
        return Graph(self.n_vertices, self.edges, root)

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Graph with one edge deleted; raises if the result is disconnected."""
        key = (u, v) if u < v else (v, u)
        if v not in self._nbr_sets[u]:
            raise VertexRangeError(f"no edge ({u}, {v}) to remove")
        return Graph(self.n_vertices, [e for e in self.edges if e != key], self.root)

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n_vertices == other.n_vertices
            and self.root == other.root
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.root, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self.n_vertices}, edges={list(self.edges)}, root={self.root})"


def degree_into_complement(g: Graph, v: int, members: Iterable[int]) -> int:
    """Count edges from ``v`` to vertices outside ``members`` (root included)."""
    s = frozenset(members)
    for w in s:
        if not 0 <= w < g.n_vertices:
            raise VertexRangeError(f"subset member {w} out of range")
        if w == g.root:
            raise VertexRangeError("subset may not contain the root")
    if v not in s:
        raise VertexRangeError(f"vertex {v} is not a member of the subset")
    return sum(1 for u in g.neighbors(v) if u not in s)


def parse_edge_list(text: str, root: int | None = None) -> Graph:
    """Build a graph from edge-list text.

    Format: optional first line ``root <r>``, then one ``<u> <v>`` pair per
    line.  Lines starting with ``#`` and blank lines are ignored.  The vertex
    count is one more than the largest label.  ``root`` overrides any root
    line; the default root is 0.
    """
    file_root: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "root":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: malformed root line")
            if edges or file_root is not None:
                raise FormatError(f"line {lineno}: root line must come first")
            file_root = _parse_label(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        edges.append((_parse_label(parts[0], lineno), _parse_label(parts[1], lineno)))
    if not edges:
        raise FormatError("no edges in input")
    n_vertices = max(max(u, v) for u, v in edges) + 1
    chosen = root if root is not None else (file_root if file_root is not None else 0)
    return Graph(n_vertices, edges, chosen)


def format_edge_list(g: Graph) -> str:
    lines = [f"root {g.root}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _parse_label(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {token!r} is not a vertex label") from None
    if value < 0:
        raise FormatError(f"line {lineno}: negative vertex label {value}")
    return value
