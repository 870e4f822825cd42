"""Seeded random graphs and closed-form clustering baselines.

All randomness flows from an explicit integer seed: networkx generators take
it directly, degree sequences come from numpy's PCG64 `default_rng(seed)`.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

import networkx as nx
import numpy as np

from semgraph.core.graph import LinkRecord, NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.stats.clustering import graph_clustering, transitivity
from semgraph.transform.projection import one_mode_projection

logger = logging.getLogger(__name__)

ACTOR = "actor"
MOVIE = "movie"
ACTED_IN = "acted-in"
ER_NODE = "node"
ER_LINK = "link"


class NullModelError(ValueError):
    """Invalid generator parameters."""
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


class BipartiteMode(str, Enum):
    INDEPENDENT = "independent"      # each actor-movie pair linked with p = μ/n_M
    CONFIGURATION = "configuration"  # Poisson degree sequences wired at random


@dataclass(frozen=True)
class BipartiteParams:
    n_a: int
    n_m: int
    mu: float
    seed: int

    @property
    def nu(self) -> float:
        """Movie-side mean from the constraint μ/n_A = ν/n_M."""
        return self.mu * self.n_m / self.n_a

    @property
    def realized_nu(self) -> float:
        """Movie-side mean the generator produces: total links n_A·μ spread over n_M movies."""
        return self.mu * self.n_a / self.n_m

    @property
    def p(self) -> float:
        return self.mu / self.n_m

    def check(self) -> None:
        if self.n_a < 1 or self.n_m < 1:
            raise NullModelError(f"n_A and n_M must be at least 1, got {self.n_a}, {self.n_m}")
        if self.mu < 0:
            raise NullModelError(f"mu must be non-negative, got {self.mu}")
        if self.mu > self.n_m:
            raise NullModelError(f"mu={self.mu} exceeds the number of movies n_M={self.n_m}")

    def metadata(self) -> dict[str, str]:
        return {
            "generator": "random_bipartite",
            "n_a": str(self.n_a),
            "n_m": str(self.n_m),
            "mu": repr(float(self.mu)),
            "nu": repr(float(self.nu)),
            "realized_nu": repr(float(self.realized_nu)),
            "seed": str(self.seed),
        }


def bipartite_schema() -> OntologySchema:
    return OntologySchema.build([ACTOR, MOVIE], [ACTED_IN], [(ACTOR, ACTED_IN, MOVIE)])


def _poisson_sequences(params: BipartiteParams) -> tuple[list[int], list[int]]:
    """Poisson degree sequences for both sides, adjusted to equal sums."""
    rng = np.random.default_rng(params.seed)
    actors = rng.poisson(params.mu, params.n_a)
    movies = rng.poisson(params.realized_nu, params.n_m)
    # Add stubs at random positions on the short side until both sides match.
    gap = int(actors.sum() - movies.sum())
    if gap > 0:
        np.add.at(movies, rng.integers(0, params.n_m, gap), 1)
    elif gap < 0:
        np.add.at(actors, rng.integers(0, params.n_a, -gap), 1)
    return actors.tolist(), movies.tolist()


def random_bipartite(
    params: BipartiteParams,
    mode: Union[BipartiteMode, str] = BipartiteMode.INDEPENDENT,
) -> SemanticGraph:
    """Actor-movie null model with Poisson marginals; deterministic for a fixed seed."""
    params.check()
    mode = BipartiteMode(mode)
    if mode is BipartiteMode.INDEPENDENT:
        generated = nx.bipartite.random_graph(params.n_a, params.n_m, params.p, seed=params.seed)
    else:
        actors, movies = _poisson_sequences(params)
        generated = nx.Graph(nx.bipartite.configuration_model(actors, movies, seed=params.seed))

    nodes = [NodeRecord(f"a{i}", ACTOR) for i in range(params.n_a)]
    nodes += [NodeRecord(f"m{j}", MOVIE) for j in range(params.n_m)]
    links = []
    for u, v in sorted(tuple(sorted(edge)) for edge in generated.edges):
        links.append(LinkRecord(f"a{u}", f"m{v - params.n_a}", ACTED_IN))

    metadata = params.metadata()
    metadata["mode"] = mode.value
    logger.info("Generated bipartite null model: %d actors, %d movies, %d links", params.n_a, params.n_m, len(links))
    return build_graph(nodes, links, bipartite_schema(), metadata=metadata)


def er_random(n: int, p: float, seed: int) -> SemanticGraph:
    """Single-type graph with each pair linked independently with probability p."""
    if n < 1:
        raise NullModelError(f"n must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise NullModelError(f"p must be in [0, 1], got {p}")

    generated = nx.fast_gnp_random_graph(n, p, seed=seed)
    nodes = [NodeRecord(f"n{i}", ER_NODE) for i in range(n)]
    links = [
        LinkRecord(f"n{u}", f"n{v}", ER_LINK)
        for u, v in sorted(tuple(sorted(edge)) for edge in generated.edges)
    ]
    schema = OntologySchema.build([ER_NODE], [ER_LINK], [(ER_NODE, ER_LINK, ER_NODE)])
    metadata = {"generator": "er_random", "n": str(n), "p": repr(float(p)), "seed": str(seed)}
    logger.info("Generated random graph: %d nodes, %d links", n, len(links))
    return build_graph(nodes, links, schema, metadata=metadata)


def predicted_projection_clustering(mu: float) -> float:
    """C = 1/(μ+1) for the one-mode projection of the Poisson bipartite null model."""
    if mu < 0:
        raise NullModelError(f"mu must be non-negative, got {mu}")
    return 1.0 / (mu + 1.0)


def predicted_random_clustering(n: int, mean_degree: float) -> float:
    """C ≈ k̄/n for an uncorrelated random graph."""
    if n < 1:
        raise NullModelError(f"n must be at least 1, got {n}")
    return mean_degree / n


@dataclass(frozen=True)
class ProjectionComparison:
    params: BipartiteParams
    mode: BipartiteMode
    predicted: float
    mean_clustering: float
    transitivity: float
    projected_nodes: int
    projected_links: int


def compare_projection_clustering(
    params: BipartiteParams,
    mode: Union[BipartiteMode, str] = BipartiteMode.INDEPENDENT,
) -> ProjectionComparison:
    """Project the null model onto actors and measure clustering next to 1/(μ+1)."""
    mode = BipartiteMode(mode)
    projected = one_mode_projection(random_bipartite(params, mode), ACTOR, MOVIE)
    return ProjectionComparison(
        params=params,
        mode=mode,
        predicted=predicted_projection_clustering(params.mu),
        mean_clustering=graph_clustering(projected),
        transitivity=transitivity(projected),
        projected_nodes=projected.n,
        projected_links=len(projected.links),
    )


@dataclass(frozen=True)
class RandomComparison:
    n: int
    p: float
    seed: int
    mean_degree: float
    predicted: float
    mean_clustering: float


def compare_random_clustering(n: int, p: float, seed: int) -> RandomComparison:
    """Measure mean clustering of er_random next to the k̄/n baseline."""
    graph = er_random(n, p, seed)
    mean_degree = 2 * graph.linked_pairs() / n
    return RandomComparison(
        n=n,
        p=p,
        seed=seed,
        mean_degree=mean_degree,
        predicted=predicted_random_clustering(n, mean_degree),
        mean_clustering=graph_clustering(graph),
    )
