"""Shortest-path statistics: the typed path-length matrix ℓ_αβ and hub types."""

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathEntry:
    """Mean BFS distance over reachable ordered pairs; unreachable pairs are only counted."""
    mean: Optional[float]
    reachable: int
    unreachable: int


@dataclass(frozen=True)
class PathMatrix:
    node_types: tuple[str, ...]
    entries: dict[tuple[str, str], PathEntry]

    def get(self, source_type: str, target_type: str) -> PathEntry:
        return self.entries[(source_type, target_type)]


@dataclass(frozen=True)
class RemovalImpact:
    """Mean distance over surviving pairs that stay reachable, before and after deleting one type."""
    node_type: str
    removed_nodes: int
    baseline_mean: Optional[float]
    removed_mean: Optional[float]
    change: Optional[float]
    lost_pairs: int
    flagged: bool


def _all_distances(view: nx.Graph) -> dict[str, dict[str, int]]:
    return {i: nx.single_source_shortest_path_length(view, i) for i in view}


def _graph_types(graph: SemanticGraph) -> tuple[str, ...]:
    return tuple(sorted(set(graph.schema.node_types) | set(graph.type_counts)))


def path_length_matrix(graph: SemanticGraph) -> PathMatrix:
    """ℓ_αβ for every ordered type pair, over ordered node pairs i ≠ j."""
    types = _graph_types(graph)
    totals = {(a, b): 0 for a in types for b in types}
    reachable = dict.fromkeys(totals, 0)

    for i, lengths in _all_distances(graph.view).items():
        alpha = graph.node_type(i)
        for j, d in lengths.items():
            if j == i:
                continue
            key = (alpha, graph.node_type(j))
            totals[key] += d
            reachable[key] += 1

    entries = {}
    for a, b in totals:
        pairs = graph.type_count(a) * graph.type_count(b) - (graph.type_count(a) if a == b else 0)
        count = reachable[(a, b)]
        entries[(a, b)] = PathEntry(
            mean=totals[(a, b)] / count if count else None,
            reachable=count,
            unreachable=pairs - count,
        )
    return PathMatrix(types, entries)


def _paired_means(
    baseline: dict[str, dict[str, int]],
    survivors: dict[str, dict[str, int]],
    keep: set[str],
) -> tuple[Optional[float], Optional[float], int, int]:
    """Means before and after removal over the pairs still reachable afterwards.

    Returns (baseline mean, removed mean, pairs reachable before, pairs reachable after).
    """
    before_pairs = 0
    before_total = 0
    after_total = 0
    after_pairs = 0
    for i in keep:
        for j in baseline.get(i, {}):
            if j != i and j in keep:
                before_pairs += 1
        for j, d in survivors.get(i, {}).items():
            if j != i:
                before_total += baseline[i][j]
                after_total += d
                after_pairs += 1
    if not after_pairs:
        return None, None, before_pairs, 0
    return before_total / after_pairs, after_total / after_pairs, before_pairs, after_pairs


def type_removal_impact(graph: SemanticGraph, threshold: float = 0.5) -> list[RemovalImpact]:
    """Effect of deleting each node type on the mean distance among the remaining nodes.

    Both means run over the surviving pairs that stay reachable, so removal can
    only lengthen them. A type is flagged when that mean grows by more than
    `threshold` hops or when any formerly reachable surviving pair is cut off.
    """
    baseline_distances = _all_distances(graph.view)
    impacts = []
    for node_type in _graph_types(graph):
        removed = set(graph.nodes_of_type(node_type))
        keep = set(graph) - removed
        survivors = nx.subgraph_view(graph.view, filter_node=lambda v: v not in removed)
        baseline_mean, removed_mean, before_pairs, after_pairs = _paired_means(
            baseline_distances, _all_distances(survivors), keep
        )
        lost_pairs = before_pairs - after_pairs

        change = removed_mean - baseline_mean if removed_mean is not None else None
        flagged = lost_pairs > 0 or (change is not None and change > threshold)
        if flagged:
            logger.info("Removing type %s lengthens or cuts paths (change=%s, lost=%d)", node_type, change, lost_pairs)
        impacts.append(RemovalImpact(
            node_type=node_type,
            removed_nodes=len(removed),
            baseline_mean=baseline_mean,
            removed_mean=removed_mean,
            change=change,
            lost_pairs=lost_pairs,
            flagged=flagged,
        ))
    return impacts


def _type_graph(schema: OntologySchema) -> nx.Graph:
    types = nx.Graph()
    types.add_nodes_from(sorted(schema.node_types))
    types.add_edges_from((a, b) for a, _, b in schema.allowed if a != b)
    return types


def ontology_hub_types(schema: OntologySchema) -> list[str]:
    """Types the ontology links to every other type; they cap the ontology diameter at 2."""
    if len(schema.node_types) < 2:
        return []
    types = _type_graph(schema)
    return sorted(t for t in types if types.degree(t) == len(types) - 1)


def ontology_diameter(schema: OntologySchema) -> Optional[int]:
    """Longest shortest path between mutually reachable node types of the ontology."""
    lengths = dict(nx.all_pairs_shortest_path_length(_type_graph(schema)))
    finite = [d for row in lengths.values() for d in row.values()]
    return max(finite) if finite else None
