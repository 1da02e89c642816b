"""Parking functions: values, degree, subset-based recognition, enumeration.

The recogniser here iterates over every nonempty subset of non-root
vertices, straight from the definition.  It is exponential on purpose: it
is the independent check against which the linear-time burning test is
compared, and the two must never be reconciled by editing either one.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Iterable, Mapping

from .errors import BudgetExceededError, DomainMismatchError, FormatError
from .graph import Graph

ORACLE_VERTEX_BOUND = 20
ENUMERATION_BUDGET = 1_000_000


class ParkingFunction:
    """Nonnegative integer values on the non-root vertices of a graph.

    Values are stored in ascending vertex order.  Instances are immutable
    value objects; "verified" status is never cached on the object, so a
    verification can't go stale.
    """

    __slots__ = ("root", "values")

    def __init__(self, root: int, values: Iterable[int]):
        vals = tuple(int(x) for x in values)
        if any(x < 0 for x in vals):
            raise ValueError("parking function values must be nonnegative")
        if not 0 <= root <= len(vals):
            raise ValueError(f"root {root} out of range for {len(vals) + 1} vertices")
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("ParkingFunction is immutable")

    @classmethod
    def zero(cls, g: Graph) -> "ParkingFunction":
        return cls(g.root, (0,) * (g.n_vertices - 1))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int], root: int) -> "ParkingFunction":
        n = len(mapping) + 1
        if set(mapping) | {root} != set(range(n)):
            raise DomainMismatchError("domain must be all non-root vertices")
        return cls(root, tuple(mapping[v] for v in sorted(mapping)))

    @classmethod
    def from_csv(cls, text: str, root: int) -> "ParkingFunction":
        try:
            values = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise FormatError(f"malformed value vector {text!r}") from None
        if any(x < 0 for x in values):
            raise FormatError("value vector entries must be nonnegative")
        return cls(root, values)

    @property
    def n_vertices(self) -> int:
        return len(self.values) + 1

    @property
    def vertices(self) -> tuple[int, ...]:
        """Domain: the non-root vertices, ascending."""
        return tuple(v for v in range(self.n_vertices) if v != self.root)

    @property
    def degree(self) -> int:
        """Sum of all values."""
        return sum(self.values)

    def value_at(self, v: int) -> int:
        if v == self.root or not 0 <= v < self.n_vertices:
            raise KeyError(f"vertex {v} is not in the domain")
        return self.values[v if v < self.root else v - 1]

    __getitem__ = value_at

    def matches(self, g: Graph) -> bool:
        return self.root == g.root and self.n_vertices == g.n_vertices

    def to_csv(self) -> str:
        return ",".join(str(x) for x in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParkingFunction):
            return NotImplemented
        return self.root == other.root and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.root, self.values))

    def __repr__(self) -> str:
        return f"ParkingFunction(root={self.root}, values={self.values})"


def degree(p: ParkingFunction) -> int:
    return p.degree


def _check_domain(g: Graph, p: ParkingFunction) -> None:
    if not p.matches(g):
        raise DomainMismatchError(
            f"function domain (root={p.root}, n={p.n_vertices}) does not match "
            f"graph (root={g.root}, n={g.n_vertices})"
        )


def _subset_tables(g: Graph) -> tuple[tuple[int, ...], list[int], list[int]]:
    """Per non-root vertex: degree and bitmask of non-root neighbours."""
    verts = g.non_root_vertices
    pos = {v: i for i, v in enumerate(verts)}
    degs = [g.degree(v) for v in verts]
    masks = []
    for v in verts:
        m = 0
        for u in g.neighbors(v):
            if u != g.root:
                m |= 1 << pos[u]
        masks.append(m)
    return verts, degs, masks


def _violating_union(degs: list[int], masks: list[int], values) -> int:
    """Bitmask union of all subsets violating the parking condition.

    A subset S violates when no member v has value < (edges of v leaving S).
    The union of violating subsets is itself violating, so the result is the
    unique maximal violating set (empty iff the values form a parking
    function).
    """
    k = len(degs)
    union = 0
    for mask in range(1, 1 << k):
        m = mask
        ok = False
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if values[i] < degs[i] - (masks[i] & mask).bit_count():
                ok = True
                break
            m ^= low
        if not ok:
            union |= mask
    return union


def is_parking_function_oracle(
    g: Graph, p: ParkingFunction, *, max_vertices: int = ORACLE_VERTEX_BOUND
) -> tuple[bool, frozenset[int] | None]:
    """Decide the parking condition by checking every nonempty vertex subset.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is the
    maximal violating subset: every member holds at least as many units as it
    has edges into the subset's complement.
    """
    _check_domain(g, p)
    verts, degs, masks = _subset_tables(g)
    if len(verts) > max_vertices:
        raise BudgetExceededError(
            f"{len(verts)} non-root vertices exceed the subset-oracle bound {max_vertices}"
        )
    union = _violating_union(degs, masks, p.values)
    if union:
        witness = frozenset(verts[i] for i in range(len(verts)) if union >> i & 1)
        return False, witness
    return True, None


def enumerate_parking_functions(
    g: Graph, *, max_candidates: int = ENUMERATION_BUDGET
) -> list[ParkingFunction]:
    """All parking functions of ``g`` in lexicographic value order.

    Candidate values at each vertex range over 0..deg-1 (singleton subsets
    force this); every candidate is filtered through the subset oracle.
    """
    verts, degs, masks = _subset_tables(g)
    if prod(degs) > max_candidates:
        raise BudgetExceededError(
            f"candidate space {prod(degs)} exceeds budget {max_candidates}"
        )
    found = []
    for vector in product(*(range(d) for d in degs)):
        if not _violating_union(degs, masks, vector):
            # verts is ascending, so the vector is already in storage order
            found.append(ParkingFunction(g.root, vector))
    return found
