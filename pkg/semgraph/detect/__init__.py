"""Relationship detection between two entities."""

from semgraph.detect.search import (  # noqa: F401
    DetectConstraints,
    DetectResult,
    detect_with_relevance,
    shortest_path_subgraph,
)
