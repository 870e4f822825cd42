"""Per-type connectivity: k̄_α, m_α, σ^k_α and degree distributions."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional

import numpy as np

from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema
from semgraph.stats.report import TypeStats, TypeStatsReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeDistribution:
    """Histogram P(k) of degrees over the nodes of one type."""
    node_type: str
    frequencies: Mapping[int, int]

    @property
    def total(self) -> int:
        return sum(self.frequencies.values())

    def mean(self) -> Optional[float]:
        if not self.total:
            return None
        return sum(k * f for k, f in self.frequencies.items()) / self.total

    def probabilities(self) -> dict[int, float]:
        total = self.total
        return {k: f / total for k, f in self.frequencies.items()} if total else {}


def type_degrees(graph: SemanticGraph, node_type: str) -> np.ndarray:
    return np.array([graph.degree(i) for i in graph.nodes_of_type(node_type)], dtype=float)


def type_degree_stats(graph: SemanticGraph, schema: OntologySchema) -> TypeStatsReport:
    """k̄_α, second moment, m_α = k̄_α/k⁰_α and σ^k_α for every schema node type."""
    rows = []
    for node_type in sorted(schema.node_types):
        base = schema.base_degree(node_type)
        degrees = type_degrees(graph, node_type)
        row = TypeStats(node_type=node_type, count=len(degrees), base_degree=base)

        if len(degrees):
            mean = float(degrees.mean())
            second = float(np.square(degrees).mean())
            spread = float(np.sqrt(np.var(degrees)))
            per_type = mean / base if base else None
            sigma = spread / base if base else None
            row = TypeStats(
                node_type=node_type,
                count=len(degrees),
                base_degree=base,
                mean_degree=mean,
                second_moment=second,
                per_type_degree=per_type,
                sigma_k=sigma,
            )
        if base == 0:
            logger.debug("Type %s has no allowed neighbor types; m and sigma_k undefined", node_type)
        rows.append(row)
    return TypeStatsReport(tuple(rows))


def degree_distribution(graph: SemanticGraph, node_type: str) -> DegreeDistribution:
    """Exact histogram of k_α(i) over nodes of type α."""
    graph.schema.require_type(node_type)
    counts = Counter(graph.degree(i) for i in graph.nodes_of_type(node_type))
    return DegreeDistribution(node_type, dict(sorted(counts.items())))
