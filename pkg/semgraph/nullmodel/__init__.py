"""Random graph null models and closed-form clustering baselines."""

from semgraph.nullmodel.generators import (  # noqa: F401
    BipartiteMode,
    BipartiteParams,
    NullModelError,
    ProjectionComparison,
    RandomComparison,
    compare_projection_clustering,
    compare_random_clustering,
    er_random,
    predicted_projection_clustering,
    predicted_random_clustering,
    random_bipartite,
)
