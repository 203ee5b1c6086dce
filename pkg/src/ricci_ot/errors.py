"""Exception hierarchy for the package.

User-facing errors (bad input, bad arguments) all derive from RicciOtError.
InternalCheckError is different: it means an exact self-verification failed,
which is a defect in this package, never a property of the input.
"""


class RicciOtError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RicciOtError):
    """Malformed input text (graph file, rational literal, weight spec)."""


class DisconnectedError(RicciOtError):
    """The input graph is not connected."""


class MetricViolation(RicciOtError):
    """An edge is strictly longer than some alternate path between its ends."""

    def __init__(self, edge, length, path, path_length):
        self.edge = edge
        self.length = length
        self.path = path
        self.path_length = path_length
        super().__init__(
            f"edge {edge[0]}--{edge[1]} has length {length} but path "
            f"{'-'.join(path)} has length {path_length}"
        )


class UnknownVertex(RicciOtError):
    """A vertex name that does not occur in the graph."""


class NotAdjacent(RicciOtError):
    """Operation requires the two vertices to be joined by an edge."""


class SameVertex(RicciOtError):
    """Operation requires two distinct vertices."""


class AlphaOutOfRange(RicciOtError):
    """Idleness parameter must lie in [0, 1]."""


class NonRationalValue(RicciOtError):
    """A weight-function value would leave the rationals."""


class NonPositiveWeight(RicciOtError):
    """Edge weights must be strictly positive."""


class TableMissingLength(RicciOtError):
    """A table weight function lacks a value for an occurring edge length."""


class NonIntegerMetric(RicciOtError):
    """Operation requires all edge lengths (hence the metric) to be integers."""


class InternalCheckError(RicciOtError):
    """An exact post-solve verification failed; indicates a defect here."""
