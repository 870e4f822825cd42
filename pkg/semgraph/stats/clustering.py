"""Clustering coefficients, plain and ontology-constrained."""

import itertools
from dataclasses import dataclass
from typing import Optional

from semgraph.core.errors import GraphError
from semgraph.core.graph import SemanticGraph, neighbor_type_counts
from semgraph.core.ontology import OntologySchema


def linked_neighbor_pairs(graph: SemanticGraph, node_id: str) -> int:
    """E_i: number of links among the neighbors of i."""
    neighbors = graph.neighbors(node_id)
    twice = sum(len(graph.neighbors(j) & neighbors) for j in neighbors)
    return twice // 2


def clustering_coefficient(graph: SemanticGraph, node_id: str) -> float:
    """C(i) = E_i / (k_i(k_i-1)/2); 0 when k_i is 0 or 1."""
    k = graph.degree(node_id)
    if k <= 1:
        return 0.0
    return linked_neighbor_pairs(graph, node_id) / (k * (k - 1) / 2)


def graph_clustering(graph: SemanticGraph) -> float:
    """Mean of C(i) over all nodes, zeros included."""
    if graph.n == 0:
        raise GraphError("Clustering of an empty graph is undefined")
    return sum(clustering_coefficient(graph, i) for i in graph) / graph.n


def transitivity(graph: SemanticGraph) -> float:
    """Global ratio: links among neighbors over neighbor pairs, summed over all nodes."""
    closed = 0
    triples = 0
    for i in graph:
        k = graph.degree(i)
        triples += k * (k - 1) // 2
        closed += linked_neighbor_pairs(graph, i)
    return closed / triples if triples else 0.0


def allowed_neighbor_pairs(graph: SemanticGraph, schema: OntologySchema, node_id: str) -> int:
    """E(i;α): unordered neighbor pairs whose types the ontology allows to be linked."""
    counts = neighbor_type_counts(graph, node_id)
    total = 0
    for a, b in itertools.combinations_with_replacement(sorted(counts), 2):
        if not schema.types_can_link(a, b):
            continue
        if a == b:
            total += counts[a] * (counts[a] - 1) // 2
        else:
            total += counts[a] * counts[b]
    return total


def semantic_clustering(graph: SemanticGraph, schema: OntologySchema, node_id: str) -> float:
    """C(i;α) = E_i / E(i;α); 0 when no neighbor pair is allowed."""
    allowed = allowed_neighbor_pairs(graph, schema, node_id)
    if allowed == 0:
        return 0.0
    return linked_neighbor_pairs(graph, node_id) / allowed


@dataclass(frozen=True)
class ClusteringRank:
    node_id: str
    node_type: str
    degree: int
    value: float


def rank_by_clustering(
    graph: SemanticGraph,
    schema: Optional[OntologySchema] = None,
    top: int = 10,
    min_degree: int = 2,
) -> list[ClusteringRank]:
    """Nodes with the largest C(i), or C(i;α) when a schema is given."""
    ranks = []
    for i in graph:
        k = graph.degree(i)
        if k < min_degree:
            continue
        value = semantic_clustering(graph, schema, i) if schema else clustering_coefficient(graph, i)
        ranks.append(ClusteringRank(i, graph.node_type(i), k, value))
    ranks.sort(key=lambda r: (-r.value, -r.degree, r.node_id))
    return ranks[:top]
