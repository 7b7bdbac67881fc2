from __future__ import annotations

from congest_apsp.utils.errors import CongestError


class GraphError(CongestError):
    """Base class for graph construction and ingestion errors."""


class GraphFormatError(GraphError):
    """Raised when an edge-list file does not follow the expected layout."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphValidationError(GraphError):
    """Raised when a graph violates an id, weight or duplicate-edge constraint."""


class DisconnectedGraphError(GraphError):
    """Raised when the underlying undirected graph is not connected."""

    def __init__(self, message: str, seed: int | None = None) -> None:
        self.seed = seed
        super().__init__(message)
