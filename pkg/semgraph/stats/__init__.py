"""Graph statistics: clustering, per-type connectivity, disparity and path lengths."""

from typing import Union

from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema
from semgraph.stats.clustering import (  # noqa: F401
    ClusteringRank,
    allowed_neighbor_pairs,
    clustering_coefficient,
    graph_clustering,
    linked_neighbor_pairs,
    rank_by_clustering,
    semantic_clustering,
    transitivity,
)
from semgraph.stats.degree import DegreeDistribution, degree_distribution, type_degree_stats  # noqa: F401
from semgraph.stats.disparity import disparity, random_disparity, type_disparity  # noqa: F401
from semgraph.stats.paths import (  # noqa: F401
    PathEntry,
    PathMatrix,
    RemovalImpact,
    ontology_diameter,
    ontology_hub_types,
    path_length_matrix,
    type_removal_impact,
)
from semgraph.stats.report import TypeStats, TypeStatsReport, YrMode  # noqa: F401


def type_stats_report(
    graph: SemanticGraph,
    schema: OntologySchema,
    mode: Union[YrMode, str] = YrMode.LITERAL,
    significant_count: int = 50,
) -> TypeStatsReport:
    """Full per-type report: connectivity and disparity in one table."""
    connectivity = type_degree_stats(graph, schema)
    return connectivity.merge(type_disparity(graph, schema, mode)).mark_significant(significant_count)
