"""Exception types raised across the package.

Each class corresponds to one rejected precondition, so callers can catch
precisely the failure they care about.
"""


class RaagError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateVertex(RaagError):
    """A vertex identifier occurs more than once."""


class LoopEdge(RaagError):
    """An edge joins a vertex to itself."""


class UnknownEndpoint(RaagError):
    """An edge endpoint is not a listed vertex."""


class UnknownVertex(RaagError):
    """A vertex argument does not belong to the graph."""


class BadParameter(RaagError):
    """A numeric or structural parameter is out of range."""


class NotAMapOfGraphs(RaagError):
    """A vertex assignment does not send edges to edges."""


class ImageEscapesCodomain(RaagError):
    """A restriction's image is not contained in the requested codomain."""


class NotImmersion(RaagError):
    """The map is not locally injective."""


class StartMismatch(RaagError):
    """A lift's start vertex does not sit over the path's first vertex."""


class GraphMismatch(RaagError):
    """Two values refer to different underlying graphs."""


class NotForest(RaagError):
    """The graph contains a cycle where a forest is required."""


class RootMismatch(RaagError):
    """A root walk does not project to the root's image, or roots do not
    cover the components one-to-one."""


class Disconnected(RaagError):
    """The graph is disconnected where connectivity is required."""


class BaseMismatch(RaagError):
    """Walks based at different vertices were combined."""


class ProjectionMismatch(RaagError):
    """Two walks expected to end over the same vertex do not."""


class EmptyF(RaagError):
    """The base set of cover vertices is empty."""


class NotSurjective(RaagError):
    """The map is not surjective on vertices where surjectivity is required."""


class EmptyGraph(RaagError):
    """The graph has no vertices."""


class CertificateGap(RaagError):
    """A certifier returned Unknown where a definite verdict was required;
    this signals an implementation bug, not a property of the input."""


class ParseError(RaagError):
    """A file or string failed to parse; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
