"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for graph construction and format problems."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered edge was given twice."""


class VertexRangeError(GraphError):
    """A vertex label falls outside 0..n_vertices-1."""


class DisconnectedGraphError(GraphError):
    """The graph (or a threshold build result) is not connected."""


class FormatError(GraphError):
    """A textual graph, tree, or value-vector description is malformed."""


class DomainMismatchError(ValueError):
    """A parking function's domain does not match the graph's non-root vertices."""


class NotSpanningTreeError(ValueError):
    """The given tree is not a spanning tree of the graph."""


class RootMismatchError(NotSpanningTreeError):
    """The tree's root differs from the graph's root."""


class BuildSequenceError(ValueError):
    """A threshold build sequence is malformed."""


class BudgetExceededError(RuntimeError):
    """An exhaustive routine was asked to exceed its configured search budget."""


class NotAParkingFunctionError(ValueError):
    """Raised when a spanning tree is requested for a non-parking input.

    Carries the certificate: the nonempty set of unburnt vertices, every
    member of which holds at least as much water as it has edges into the
    complement of the set.
    """

    def __init__(self, certificate, trace=None):
        super().__init__(f"not a parking function; certificate {sorted(certificate)}")
        self.certificate = frozenset(certificate)
        self.trace = trace
