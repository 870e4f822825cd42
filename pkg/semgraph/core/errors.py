"""Exceptions raised by the graph model and the measures built on it."""

from typing import Optional


class GraphError(Exception):
    """Semantic graph error."""
    def __init__(self, message: str, node_id: Optional[str] = None, detail: Optional[str] = None):
        self.message = message
        self.node_id = node_id
        self.detail = detail
        super().__init__(message)


class UnknownNodeError(GraphError):
    """A node id that is not in the graph."""
    def __init__(self, node_id: str):
        super().__init__(f"Unknown node: {node_id}", node_id=node_id)


class DuplicateNodeError(GraphError):
    """Two node records share one id."""
    def __init__(self, node_id: str):
        super().__init__(f"Duplicate node id: {node_id}", node_id=node_id)


class SelfLoopError(GraphError):
    """A link whose endpoints are the same node."""
    def __init__(self, node_id: str, link_type: str):
        super().__init__(
            f"Self-loop on node {node_id} (link type {link_type})",
            node_id=node_id,
            detail=link_type,
        )


class UndefinedMeasureError(GraphError):
    """A measure evaluated where its formula is undefined (e.g. disparity at degree 0)."""


class InvariantError(GraphError):
    """An internal consistency check failed."""


class OntologyError(Exception):
    """Ontology schema error (undeclared or unknown type)."""
    def __init__(self, message: str, type_name: Optional[str] = None):
        self.message = message
        self.type_name = type_name
        super().__init__(message)
