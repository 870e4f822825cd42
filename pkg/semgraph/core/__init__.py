"""Typed graph model and ontology schema."""

from semgraph.core.errors import (  # noqa: F401
    DuplicateNodeError,
    GraphError,
    InvariantError,
    OntologyError,
    SelfLoopError,
    UndefinedMeasureError,
    UnknownNodeError,
)
from semgraph.core.ontology import OntologySchema, allowed_neighbor_types  # noqa: F401
from semgraph.core.graph import (  # noqa: F401
    LinkRecord,
    NodeRecord,
    SemanticGraph,
    Violation,
    build_graph,
    check_invariants,
    neighbors_by_type,
    validate,
)
