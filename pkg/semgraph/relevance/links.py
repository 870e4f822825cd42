"""Common-neighbor relevance S(a,b) of existing and latent links."""

import itertools
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Optional

import networkx as nx
import numpy as np

from semgraph.core.errors import GraphError
from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema

logger = logging.getLogger(__name__)

DEFAULT_MIN_LINKS = 5


@dataclass(frozen=True)
class LinkRelevance:
    """S(a,b) = |N(a,b)| / |T(a,b)|, with N and T excluding a and b."""
    a: str
    b: str
    common: int  # |N(a,b)|
    union: int   # |T(a,b)|
    degree_a: int
    degree_b: int

    @property
    def score(self) -> float:
        return self.common / self.union if self.union else 0.0


@dataclass(frozen=True)
class LinkTypeRelevance:
    link_type: str
    count: int
    mean: float
    std: float


@dataclass(frozen=True)
class LinkOutlier:
    link_type: str
    a: str
    b: str
    score: float
    type_mean: float
    deviation: float  # in standard deviations, signed


def _neighborhood(graph: SemanticGraph, node_id: str, radius: int) -> set[str]:
    if radius == 1:
        return set(graph.neighbors(node_id))
    graph.node(node_id)
    return set(nx.single_source_shortest_path_length(graph.view, node_id, cutoff=radius)) - {node_id}


def link_relevance(graph: SemanticGraph, a: str, b: str, radius: int = 1) -> LinkRelevance:
    """Relevance of a (possibly absent) link between a and b.

    T is taken as the set N(a) ∪ N(b) minus {a, b}; when a and b are adjacent
    this is two less than deg(a) + deg(b) - |N|.
    """
    if a == b:
        raise GraphError(f"Link relevance needs two distinct nodes, got {a} twice", node_id=a)
    if radius < 1:
        raise ValueError(f"radius must be at least 1, got {radius}")
    near_a = _neighborhood(graph, a, radius) - {b}
    near_b = _neighborhood(graph, b, radius) - {a}
    return LinkRelevance(
        a=a,
        b=b,
        common=len(near_a & near_b),
        union=len(near_a | near_b),
        degree_a=graph.degree(a),
        degree_b=graph.degree(b),
    )


def semantic_link_relevance(
    graph: SemanticGraph,
    schema: OntologySchema,
    a: str,
    b: str,
) -> LinkRelevance:
    """S(a,b) counting only neighbors the ontology allows to be linked to the other endpoint."""
    if a == b:
        raise GraphError(f"Link relevance needs two distinct nodes, got {a} twice", node_id=a)
    type_a, type_b = graph.node_type(a), graph.node_type(b)
    near_a = {w for w in graph.neighbors(a) - {b} if schema.types_can_link(graph.node_type(w), type_b)}
    near_b = {w for w in graph.neighbors(b) - {a} if schema.types_can_link(graph.node_type(w), type_a)}
    common = (graph.neighbors(a) & graph.neighbors(b)) - {a, b}
    return LinkRelevance(
        a=a,
        b=b,
        common=len(common),
        union=len(near_a | near_b | common),
        degree_a=graph.degree(a),
        degree_b=graph.degree(b),
    )


def _scores_by_type(graph: SemanticGraph) -> dict[str, list[LinkRelevance]]:
    """S for every distinct (pair, link type) in the graph."""
    by_type: dict[str, list[LinkRelevance]] = defaultdict(list)
    for u, v in sorted(tuple(sorted(edge)) for edge in graph.view.edges):
        relevance = link_relevance(graph, u, v)
        for link_type in sorted(graph.link_types_between(u, v)):
            by_type[link_type].append(relevance)
    return by_type


def link_type_relevance(graph: SemanticGraph) -> list[LinkTypeRelevance]:
    """Mean S per link type, lowest first; a low mean marks a type not useful for detection."""
    results = []
    for link_type, scores in _scores_by_type(graph).items():
        values = np.array([s.score for s in scores], dtype=float)
        results.append(LinkTypeRelevance(
            link_type=link_type,
            count=len(values),
            mean=float(values.mean()),
            std=float(values.std()),
        ))
    results.sort(key=lambda r: (r.mean, r.link_type))
    return results


def relevance_outliers(
    graph: SemanticGraph,
    z: float,
    min_links: int = DEFAULT_MIN_LINKS,
) -> list[LinkOutlier]:
    """Links whose S is more than z population standard deviations from their type mean."""
    if z <= 0:
        raise ValueError(f"z must be positive, got {z}")
    outliers = []
    for link_type, scores in sorted(_scores_by_type(graph).items()):
        if len(scores) < min_links:
            logger.debug("Skipping link type %s: %d links < %d", link_type, len(scores), min_links)
            continue
        values = np.array([s.score for s in scores], dtype=float)
        mean, std = float(values.mean()), float(values.std())
        if std == 0:
            continue
        for relevance, value in zip(scores, values):
            deviation = (value - mean) / std
            if abs(deviation) > z:
                outliers.append(LinkOutlier(
                    link_type=link_type,
                    a=relevance.a,
                    b=relevance.b,
                    score=float(value),
                    type_mean=mean,
                    deviation=float(deviation),
                ))
    outliers.sort(key=lambda o: (-abs(o.deviation), o.link_type, o.a, o.b))
    return outliers


def latent_links(
    graph: SemanticGraph,
    min_s: float,
    schema: OntologySchema,
) -> list[LinkRelevance]:
    """Non-adjacent, ontology-compatible pairs with S ≥ min_s, highest S first."""
    if not 0 < min_s <= 1:
        raise ValueError(f"min_s must be in (0, 1], got {min_s}")
    # S > 0 requires a common neighbor, so candidates are pairs two hops apart.
    candidates: set[tuple[str, str]] = set()
    for w in graph:
        for a, b in itertools.combinations(sorted(graph.neighbors(w)), 2):
            if not graph.has_link(a, b):
                candidates.add((a, b))

    found = []
    for a, b in sorted(candidates):
        if not schema.types_can_link(graph.node_type(a), graph.node_type(b)):
            continue
        relevance = link_relevance(graph, a, b)
        if relevance.score >= min_s:
            found.append(relevance)
    found.sort(key=lambda r: (-r.score, r.a, r.b))
    return found


def rank_links(
    graph: SemanticGraph,
    by: str = "score",
    top: Optional[int] = 10,
    schema: Optional[OntologySchema] = None,
) -> list[LinkRelevance]:
    """Existing links ranked by S ("score") or by raw common-neighbor count ("common").

    With a schema, S is the ontology-constrained score of semantic_link_relevance.
    """
    if by not in ("score", "common"):
        raise ValueError(f"by must be 'score' or 'common', got {by!r}")
    pairs = [tuple(sorted(edge)) for edge in graph.view.edges]
    if schema is None:
        scored = [link_relevance(graph, a, b) for a, b in pairs]
    else:
        scored = [semantic_link_relevance(graph, schema, a, b) for a, b in pairs]
    if by == "score":
        scored.sort(key=lambda r: (-r.score, -r.common, r.a, r.b))
    else:
        scored.sort(key=lambda r: (-r.common, -r.score, r.a, r.b))
    return scored[:top] if top is not None else scored


def link_type_frequencies(graph: SemanticGraph) -> list[tuple[str, int]]:
    """Link records per type, least frequent first."""
    counts = Counter(link.link_type for link in graph.links)
    return sorted(counts.items(), key=lambda item: (item[1], item[0]))
