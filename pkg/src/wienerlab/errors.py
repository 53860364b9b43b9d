"""Exception hierarchy shared by all wienerlab modules."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for invalid graph input."""


class InvalidVertexError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    """Raised where a quantity is only defined on connected graphs."""


class DisconnectingDeletionError(GraphError):
    """The deleted vertex is a cut vertex, so the Wiener change is undefined."""


class ConstructionError(ValueError):
    """Parameters for which the cactus construction does not apply."""


class VerificationError(AssertionError):
    """A computed result disagrees with a value it must equal."""


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
