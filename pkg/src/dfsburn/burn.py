"""Depth-first burning: parking functions to rooted spanning trees and back.

Fire spreads from the root, always toward the largest unburnt neighbour.
A vertex holding water spends one unit to dampen the incoming edge instead
of burning.  If everything burns, the marked edges form a spanning tree
and the input was a parking function; otherwise the unburnt set is a
certificate that it was not.

The inner loops live in a compiled extension when available; set
``DFSBURN_PURE=1`` to force the pure-Python kernels.  Both backends drive
an explicit work stack, so call depth never limits the graph size.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .errors import NotAParkingFunctionError
from .graph import Edge, Graph
from .parking import ParkingFunction, _check_domain
from .trees import RootedTree, check_spans

if os.environ.get("DFSBURN_PURE"):
    from . import _burn_py as _KERNEL
else:
    try:
        from . import _burncore as _KERNEL  # type: ignore[no-redef]
    except ImportError:
        from . import _burn_py as _KERNEL


def kernel_backend() -> str:
    """Which burning kernel is active: ``"compiled"`` or ``"python"``."""
    return _KERNEL.BACKEND


class Mark(str, Enum):
    TREE = "tree"
    DAMPENED = "dampened"


class TraceEntry(NamedTuple):
    tail: int
    head: int
    mark: Mark


class BurnTrace:
    """Ordered list of directed edges seen by a burn, each marked.

    An edge marked tree appears exactly once and never again afterwards;
    dampened entries with head ``j`` count the water consumed at ``j``.
    Entries are materialised lazily from compact arrays, so traces of large
    burns stay cheap to carry around.
    """

    __slots__ = ("_tails", "_heads", "_marks")

    def __init__(self, tails, heads, marks):
        self._tails = tails
        self._heads = heads
        self._marks = marks

    def __len__(self) -> int:
        return len(self._tails)

    def __getitem__(self, k: int) -> TraceEntry:
        if not isinstance(k, int):
            raise TypeError("trace indices must be integers")
        if k < 0:
            k += len(self._tails)
        if not 0 <= k < len(self._tails):
            raise IndexError("trace index out of range")
        mark = Mark.DAMPENED if self._marks[k] else Mark.TREE
        return TraceEntry(self._tails[k], self._heads[k], mark)

    def __iter__(self) -> Iterator[TraceEntry]:
        for k in range(len(self._tails)):
            yield self[k]

    def dampened_edges(self) -> tuple[Edge, ...]:
        """The dampened entries, in trace order."""
        if self._marks.count(1) == 0:
            return ()
        return tuple(
            (self._tails[k], self._heads[k])
            for k in range(len(self._marks))
            if self._marks[k]
        )

    def dampened_into(self, v: int) -> int:
        """How many dampened entries have head ``v``."""
        return sum(
            1
            for k in range(len(self._marks))
            if self._marks[k] and self._heads[k] == v
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BurnTrace):
            return NotImplemented
        return (
            list(self._tails) == list(other._tails)
            and list(self._heads) == list(other._heads)
            and list(self._marks) == list(other._marks)
        )

    def __hash__(self) -> int:
        return hash((tuple(self._tails), tuple(self._heads), tuple(self._marks)))

    def __repr__(self) -> str:
        shown = ", ".join(f"({e.tail},{e.head}){'*' if e.mark is Mark.DAMPENED else ''}"
                          for e in list(self)[:8])
        more = "" if len(self) <= 8 else f", ... {len(self) - 8} more"
        return f"BurnTrace[{shown}{more}]"


@dataclass(frozen=True)
class BurnResult:
    """Outcome of a burn: a spanning tree, or a non-parking certificate.

    ``tree`` is None exactly when ``unburnt`` is nonempty.  ``burnt`` lists
    vertices in burn order (root first); ``dampened`` lists dampened edges in
    the order they were created.
    """

    burnt: tuple[int, ...]
    tree: RootedTree | None
    dampened: tuple[Edge, ...]
    unburnt: frozenset[int]
    trace: BurnTrace

    @property
    def is_parking_function(self) -> bool:
        return not self.unburnt


def dfs_burn(g: Graph, p: ParkingFunction) -> BurnResult:
    """Run the burning algorithm on ``p`` (never mutated) over ``g``.

    Total work is O(|V| + |E|).
    """
    _check_domain(g, p)
    starts, flat = g.csr()
    water = array("i", [0]) * g.n_vertices
    for v, value in zip(p.vertices, p.values):
        water[v] = value
    order, parent, tt, th, tm = _KERNEL.burn(starts, flat, g.root, water)
    trace = BurnTrace(tt, th, tm)
    burnt = tuple(order)
    if len(burnt) == g.n_vertices:
        tree = RootedTree(g.root, {v: parent[v] for v in range(g.n_vertices) if v != g.root})
        return BurnResult(burnt, tree, trace.dampened_edges(), frozenset(), trace)
    unburnt = frozenset(v for v in range(g.n_vertices) if parent[v] < 0)
    return BurnResult(burnt, None, trace.dampened_edges(), unburnt, trace)


def parking_to_tree(g: Graph, p: ParkingFunction) -> RootedTree:
    """The spanning tree assigned to a parking function by the burn.

    Raises :class:`NotAParkingFunctionError` (carrying the certificate set)
    when ``p`` is not a parking function.
    """
    result = dfs_burn(g, p)
    if not result.is_parking_function:
        raise NotAParkingFunctionError(result.unburnt, result.trace)
    assert result.tree is not None
    return result.tree


def dfs_tree(g: Graph) -> RootedTree:
    """Depth-first search tree: the burn of the all-zero function."""
    return parking_to_tree(g, ParkingFunction.zero(g))


def tree_to_parking(g: Graph, t: RootedTree) -> tuple[ParkingFunction, BurnTrace]:
    """Invert the burn: recover the parking function of a spanning tree."""
    check_spans(g, t)
    starts, flat = g.csr()
    tparent = array("i", [0]) * g.n_vertices
    tparent[g.root] = g.root
    for c, par in t.parent.items():
        tparent[c] = par
    values, tt, th, tm = _KERNEL.unroll(starts, flat, g.root, tparent)
    pf = ParkingFunction(g.root, tuple(values[v] for v in g.non_root_vertices))
    return pf, BurnTrace(tt, th, tm)


def trace_of(g: Graph, p: ParkingFunction) -> BurnTrace:
    """The full marked-edge sequence observed while burning ``p``."""
    return dfs_burn(g, p).trace
