"""Pruning-to-attribute: a node leaves the graph and becomes an attribute of its neighbors."""

import logging
from typing import Iterable, Union

from semgraph.core.graph import NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.relevance.nodes import DEFAULT_TAU, RelevanceMode, node_relevance

logger = logging.getLogger(__name__)

DEFAULT_SEPARATOR = "|"


def _append(attributes: dict[str, str], name: str, value: str, separator: str) -> None:
    if attributes.get(name):
        attributes[name] = f"{attributes[name]}{separator}{value}"
    else:
        attributes[name] = value


def prune_nodes(
    graph: SemanticGraph,
    targets: dict[str, str],
    separator: str = DEFAULT_SEPARATOR,
) -> SemanticGraph:
    """Remove each target node and its links; neighbors record it under the given attribute name.

    `targets` maps node id -> attribute name.
    """
    for node_id in targets:
        graph.node(node_id)

    attributes = {i: dict(node.attributes) for i, node in graph.nodes.items() if i not in targets}
    for node_id in sorted(targets):
        for neighbor in sorted(graph.neighbors(node_id)):
            if neighbor in attributes:
                _append(attributes[neighbor], targets[node_id], node_id, separator)

    nodes = [
        NodeRecord(node.id, node.node_type, attributes[node.id])
        for node in graph.nodes.values()
        if node.id not in targets
    ]
    links = [
        link for link in graph.links
        if link.source not in targets and link.target not in targets
    ]
    logger.info(
        "Pruned %d node(s); %d link record(s) removed",
        len(targets), len(graph.links) - len(links),
    )
    return build_graph(nodes, links, graph.schema, metadata=graph.metadata)


def prune_node(
    graph: SemanticGraph,
    node_id: str,
    attribute_name: str,
    separator: str = DEFAULT_SEPARATOR,
) -> SemanticGraph:
    """New graph without node i and its links; each former neighbor gets attribute_name = i."""
    return prune_nodes(graph, {node_id: attribute_name}, separator)


def prune_candidates(
    graph: SemanticGraph,
    schema: OntologySchema,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
) -> list[str]:
    """Nodes of degree ≥ 2 whose relevance value does not exceed τ."""
    return [
        i for i in sorted(graph)
        if graph.degree(i) >= 2 and not node_relevance(graph, schema, i, tau, mode).useful
    ]


def prune_irrelevant(
    graph: SemanticGraph,
    schema: OntologySchema,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
    separator: str = DEFAULT_SEPARATOR,
) -> SemanticGraph:
    """Prune every non-useful node, using its node type as the attribute name."""
    targets: Iterable[str] = prune_candidates(graph, schema, tau, mode)
    return prune_nodes(graph, {i: graph.node_type(i) for i in targets}, separator)
