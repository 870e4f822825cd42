"""Transitivity-based node relevance and the link-type pair matrix M(t₁,t₂)."""

import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Mapping, Optional, Union

from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema
from semgraph.stats.clustering import clustering_coefficient, semantic_clustering

DEFAULT_TAU = 0.1


class RelevanceMode(str, Enum):
    PLAIN = "plain"          # C(i)
    SEMANTIC = "semantic"    # C(i;α)
    WEAK_2HOP = "weak-2hop"  # C(i) counting pairs joined through an already useful node


@dataclass(frozen=True)
class NodeRelevance:
    node_id: str
    mode: RelevanceMode
    value: float
    tau: float

    @property
    def useful(self) -> bool:
        return self.value > self.tau


@dataclass(frozen=True)
class PairTypeMatrix:
    """M(t₁,t₂) around one center node; keys are stored as sorted link-type pairs."""
    center: str
    counts: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def get(self, t1: str, t2: str) -> int:
        return self.counts.get(tuple(sorted((t1, t2))), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def weakest(self, max_count: int = 0) -> list[tuple[str, str]]:
        """Link-type pairs with at most `max_count` linked neighbor pairs."""
        return sorted(pair for pair, count in self.counts.items() if count <= max_count)


def _check_tau(tau: float) -> None:
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must be in [0, 1], got {tau}")


def weak_clustering(
    graph: SemanticGraph,
    node_id: str,
    useful: AbstractSet[str],
) -> float:
    """C(i) where a neighbor pair also counts when both share a useful third node."""
    neighbors = sorted(graph.neighbors(node_id))
    k = len(neighbors)
    if k <= 1:
        return 0.0
    related = 0
    for j, l in itertools.combinations(neighbors, 2):
        if graph.has_link(j, l):
            related += 1
            continue
        bridges = (graph.neighbors(j) & graph.neighbors(l)) - {node_id}
        if bridges & useful:
            related += 1
    return related / (k * (k - 1) / 2)


def node_relevance(
    graph: SemanticGraph,
    schema: OntologySchema,
    node_id: str,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
    useful: Optional[AbstractSet[str]] = None,
) -> NodeRelevance:
    """Score node i; it is useful for relationship detection when its value exceeds τ.

    `useful` is the caller's set of nodes already deemed useful; only the
    weak-2hop mode reads it, in a single pass.
    """
    _check_tau(tau)
    mode = RelevanceMode(mode)
    if mode is RelevanceMode.PLAIN:
        value = clustering_coefficient(graph, node_id)
    elif mode is RelevanceMode.SEMANTIC:
        value = semantic_clustering(graph, schema, node_id)
    else:
        value = weak_clustering(graph, node_id, useful or frozenset())
    return NodeRelevance(node_id, mode, value, tau)


def rank_node_relevance(
    graph: SemanticGraph,
    schema: OntologySchema,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
    useful: Optional[AbstractSet[str]] = None,
) -> list[NodeRelevance]:
    """Relevance of every node, sorted by id."""
    return [node_relevance(graph, schema, i, tau, mode, useful) for i in sorted(graph)]


def useful_nodes(
    graph: SemanticGraph,
    schema: OntologySchema,
    tau: float = DEFAULT_TAU,
    mode: Union[RelevanceMode, str] = RelevanceMode.PLAIN,
) -> frozenset[str]:
    return frozenset(r.node_id for r in rank_node_relevance(graph, schema, tau, mode) if r.useful)


def pair_type_matrix(graph: SemanticGraph, node_id: str) -> PairTypeMatrix:
    """Count linked neighbor pairs (a, b) by the link types attaching a and b to i.

    Every link-type pair that some neighbor pair of i could realize is present,
    so pairs that never close a triangle appear with count 0.
    """
    neighbors = sorted(graph.neighbors(node_id))
    counts: Counter = Counter()
    for a, b in itertools.combinations(neighbors, 2):
        pairs = {
            tuple(sorted((t1, t2)))
            for t1 in graph.link_types_between(node_id, a)
            for t2 in graph.link_types_between(node_id, b)
        }
        linked = graph.has_link(a, b)
        for pair in pairs:
            counts[pair] += 1 if linked else 0
    return PairTypeMatrix(node_id, dict(sorted(counts.items())))
