"""Type coarsening: relabel node types without merging node instances."""

import logging

from semgraph.core.graph import NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.transform.merge import TransformError, TypeMergeMap

logger = logging.getLogger(__name__)

ORIGINAL_TYPE = "original_type"


def coarsen(
    graph: SemanticGraph,
    schema: OntologySchema,
    merge_map: TypeMergeMap,
) -> tuple[SemanticGraph, OntologySchema]:
    """Relabel node and ontology types through merge_map; links and node ids are untouched."""
    missing = merge_map.missing(schema.node_types | set(graph.type_counts))
    if missing:
        raise TransformError(
            f"Merge map does not cover node type(s): {', '.join(missing)}",
            detail=",".join(missing),
        )

    coarse_schema = schema.relabel(merge_map.mapping)
    nodes = []
    for node in graph.nodes.values():
        coarse_type = merge_map[node.node_type]
        attributes = dict(node.attributes)
        if coarse_type != node.node_type:
            attributes.setdefault(ORIGINAL_TYPE, node.node_type)
        nodes.append(NodeRecord(node.id, coarse_type, attributes))

    coarse = build_graph(nodes, graph.links, coarse_schema, metadata=graph.metadata)
    logger.info(
        "Coarsened %d node types into %d",
        len(schema.node_types), len(coarse_schema.node_types),
    )
    return coarse, coarse_schema
