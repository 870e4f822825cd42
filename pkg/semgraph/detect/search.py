"""Relationship detection: the union of shortest paths between two entities."""

import logging
from dataclasses import dataclass, field, replace
from typing import AbstractSet, Optional, Union

import networkx as nx

from semgraph.core.errors import GraphError
from semgraph.core.graph import SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.relevance.nodes import DEFAULT_TAU, RelevanceMode, node_relevance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DetectConstraints:
    """What the search may not traverse. Source and target are always kept."""
    excluded_node_types: AbstractSet[str] = frozenset()
    excluded_link_types: AbstractSet[str] = frozenset()
    max_degree: Optional[int] = None
    prune_set: AbstractSet[str] = frozenset()
    use_pruned: bool = False

    def as_flags(self) -> dict[str, str]:
        return {
            "excluded_node_types": ",".join(sorted(self.excluded_node_types)),
            "excluded_link_types": ",".join(sorted(self.excluded_link_types)),
            "max_degree": "" if self.max_degree is None else str(self.max_degree),
            "pruned": str(len(self.prune_set)) if self.use_pruned else "",
        }


@dataclass(frozen=True)
class DetectResult:
    source: str
    target: str
    distance: Optional[int]  # None when unreachable
    subgraph: SemanticGraph
    constraints: DetectConstraints = field(default_factory=DetectConstraints)

    @property
    def reachable(self) -> bool:
        return self.distance is not None

    def summary(self) -> str:
        distance = "unreachable" if self.distance is None else str(self.distance)
        return (
            f"source={self.source} target={self.target} distance={distance} "
            f"nodes={self.subgraph.n} links={len(self.subgraph.links)}"
        )


def _search_view(graph: SemanticGraph, a: str, b: str, constraints: DetectConstraints) -> nx.Graph:
    endpoints = {a, b}

    def traversable(v: str) -> bool:
        if v in endpoints:
            return True
        if graph.node_type(v) in constraints.excluded_node_types:
            return False
        if constraints.max_degree is not None and graph.degree(v) > constraints.max_degree:
            return False
        if constraints.use_pruned and v in constraints.prune_set:
            return False
        return True

    def usable(u: str, v: str) -> bool:
        return bool(graph.link_types_between(u, v) - constraints.excluded_link_types)

    return nx.subgraph_view(graph.view, filter_node=traversable, filter_edge=usable)


def shortest_path_subgraph(
    graph: SemanticGraph,
    a: str,
    b: str,
    constraints: Optional[DetectConstraints] = None,
) -> DetectResult:
    """All nodes and links lying on at least one shortest a-b path under the constraints."""
    if a == b:
        raise GraphError(f"Source and target are the same node: {a}", node_id=a)
    graph.node(a)
    graph.node(b)
    constraints = constraints or DetectConstraints()
    view = _search_view(graph, a, b, constraints)

    try:
        path = nx.bidirectional_shortest_path(view, a, b)
    except nx.NetworkXNoPath:
        logger.info("No path between %s and %s under constraints", a, b)
        return DetectResult(a, b, None, build_graph([], [], graph.schema), constraints)

    distance = len(path) - 1
    forward = nx.single_source_shortest_path_length(view, a, cutoff=distance)
    backward = nx.single_source_shortest_path_length(view, b, cutoff=distance)
    on_path = {v for v, d in forward.items() if v in backward and d + backward[v] == distance}

    links = [
        link for link in graph.links
        if link.source in on_path
        and link.target in on_path
        and link.link_type not in constraints.excluded_link_types
        and abs(forward[link.source] - forward[link.target]) == 1
    ]
    nodes = [graph.node(v) for v in sorted(on_path)]
    logger.debug("Detected %d nodes on shortest %s-%s paths (distance %d)", len(nodes), a, b, distance)
    return DetectResult(a, b, distance, build_graph(nodes, links, graph.schema), constraints)


def detect_with_relevance(
    graph: SemanticGraph,
    schema: OntologySchema,
    a: str,
    b: str,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
    constraints: Optional[DetectConstraints] = None,
) -> DetectResult:
    """Shortest-path subgraph avoiding interior nodes whose relevance value is ≤ τ."""
    mode = RelevanceMode(mode)
    if mode is RelevanceMode.WEAK_2HOP:
        raise ValueError("detection filters on plain or semantic relevance only")
    if a == b:
        raise GraphError(f"Source and target are the same node: {a}", node_id=a)
    graph.node(a)
    graph.node(b)

    pruned = frozenset(
        i for i in graph
        if i not in (a, b) and not node_relevance(graph, schema, i, tau, mode).useful
    )
    logger.info("Relevance filter (tau=%s, %s) excludes %d node(s)", tau, mode.value, len(pruned))
    constraints = constraints or DetectConstraints()
    if constraints.use_pruned:
        pruned |= constraints.prune_set
    constraints = replace(constraints, prune_set=pruned, use_pruned=True)
    return shortest_path_subgraph(graph, a, b, constraints)
