"""Relevance of nodes and links for relationship detection, and pruning."""

from semgraph.relevance.nodes import (  # noqa: F401
    DEFAULT_TAU,
    NodeRelevance,
    PairTypeMatrix,
    RelevanceMode,
    node_relevance,
    pair_type_matrix,
    rank_node_relevance,
    useful_nodes,
    weak_clustering,
)
from semgraph.relevance.links import (  # noqa: F401
    LinkOutlier,
    LinkRelevance,
    LinkTypeRelevance,
    latent_links,
    link_relevance,
    link_type_frequencies,
    link_type_relevance,
    rank_links,
    relevance_outliers,
    semantic_link_relevance,
)
from semgraph.relevance.prune import (  # noqa: F401
    prune_candidates,
    prune_irrelevant,
    prune_node,
    prune_nodes,
)
