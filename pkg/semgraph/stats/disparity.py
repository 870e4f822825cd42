"""Disparity of connected types: Y₂(i;α), Y̅₂(α), Y^r₂ and R(α)."""

from typing import Union

import numpy as np

from semgraph.core.errors import UndefinedMeasureError
from semgraph.core.graph import SemanticGraph, neighbor_type_counts
from semgraph.core.ontology import OntologySchema
from semgraph.stats.report import TypeStats, TypeStatsReport, YrMode


def disparity(graph: SemanticGraph, node_id: str) -> float:
    """Y₂(i;α) = Σ_β (k_αβ(i)/k_α(i))²."""
    counts = neighbor_type_counts(graph, node_id)
    k = sum(counts.values())
    if k == 0:
        raise UndefinedMeasureError(f"Disparity is undefined for isolated node {node_id}", node_id=node_id)
    return sum((c / k) ** 2 for c in counts.values())


def random_disparity(
    graph: SemanticGraph,
    schema: OntologySchema,
    node_type: str,
    mode: YrMode = YrMode.LITERAL,
) -> float:
    """Y^r₂: disparity of a node whose neighbors are picked at random from V(α)."""
    neighbor_types = sorted(schema.neighbor_types(node_type))
    populations = [graph.type_count(beta) for beta in neighbor_types]
    if mode is YrMode.LITERAL:
        total = graph.n
    else:
        total = sum(populations)
    if total == 0:
        return 0.0
    return sum((p / total) ** 2 for p in populations)


def type_disparity(
    graph: SemanticGraph,
    schema: OntologySchema,
    mode: Union[YrMode, str] = YrMode.LITERAL,
) -> TypeStatsReport:
    """Y̅₂(α), σ^Y_α over nodes with degree ≥ 1, then R(α) and σ^R_α against Y^r₂."""
    mode = YrMode(mode)
    rows = []
    for node_type in sorted(schema.node_types):
        members = graph.nodes_of_type(node_type)
        values = np.array([disparity(graph, i) for i in members if graph.degree(i) > 0], dtype=float)
        baseline = random_disparity(graph, schema, node_type, mode)

        mean = float(values.mean()) if len(values) else None
        sigma = float(np.sqrt(np.var(values))) if len(values) else None
        r = mean / baseline if mean is not None and baseline > 0 else None
        sigma_r = sigma / baseline if sigma is not None and baseline > 0 else None

        rows.append(TypeStats(
            node_type=node_type,
            count=len(members),
            base_degree=schema.base_degree(node_type),
            disparity_nodes=len(values),
            mean_disparity=mean,
            sigma_y=sigma,
            random_disparity=baseline,
            r=r,
            sigma_r=sigma_r,
        ))
    return TypeStatsReport(tuple(rows), yr_mode=mode)
