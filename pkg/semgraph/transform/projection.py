"""One-mode projection of a bipartite slice of a semantic graph."""

import logging

import networkx as nx

from semgraph.core.graph import LinkRecord, NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.transform.merge import TransformError

logger = logging.getLogger(__name__)

SHARED_COUNT = "shared_count"
SHARED_VIA = "via"
VIA_SEPARATOR = "|"


def projection_link_type(via_type: str) -> str:
    return f"shares-{via_type}"


def one_mode_projection(graph: SemanticGraph, keep_type: str, via_type: str) -> SemanticGraph:
    """Link two keep_type nodes when they share at least one via_type neighbor.

    Links record the number of shared via nodes and their ids. Links to nodes
    of other types are ignored; a keep-keep or via-via link is an error.
    """
    if keep_type == via_type:
        raise TransformError(f"Cannot project type {keep_type} via itself")

    keep = graph.nodes_of_type(keep_type)
    via = graph.nodes_of_type(via_type)
    bipartite = nx.Graph()
    bipartite.add_nodes_from(keep, bipartite=0)
    bipartite.add_nodes_from(via, bipartite=1)

    for u, v in graph.view.edges:
        types = {graph.node_type(u), graph.node_type(v)}
        if types == {keep_type, via_type}:
            bipartite.add_edge(u, v)
        elif types <= {keep_type, via_type}:
            raise TransformError(
                f"Link {u}-{v} joins two {types.pop()} nodes; the {keep_type}/{via_type} slice is not bipartite",
                detail=f"{u}-{v}",
            )

    projected = nx.bipartite.weighted_projected_graph(bipartite, keep)
    link_type = projection_link_type(via_type)
    links = []
    for u, v, data in sorted(projected.edges(data=True), key=lambda e: tuple(sorted(e[:2]))):
        a, b = sorted((u, v))
        shared = sorted(nx.common_neighbors(bipartite, a, b))
        links.append(LinkRecord(a, b, link_type, {
            SHARED_COUNT: str(data["weight"]),
            SHARED_VIA: VIA_SEPARATOR.join(shared),
        }))

    nodes = [NodeRecord(i, keep_type, dict(graph.node(i).attributes)) for i in keep]
    schema = OntologySchema.complete([keep_type], link_type)
    logger.info("Projected %d %s nodes via %s: %d links", len(nodes), keep_type, via_type, len(links))
    return build_graph(nodes, links, schema, metadata=graph.metadata)
