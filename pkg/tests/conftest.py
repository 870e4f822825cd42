"""Shared fixtures: bundled toy graphs and a seeded random typed-graph factory."""

from __future__ import annotations

import itertools
import random
from pathlib import Path
from typing import Callable, Optional

import pytest

from semgraph.config import FIXTURES_DIR
from semgraph.core import LinkRecord, NodeRecord, OntologySchema, SemanticGraph, build_graph
from semgraph.ingest import load_graph


def fixture_path(name: str, file: str) -> Path:
    return FIXTURES_DIR / name / file


def load_fixture(name: str) -> tuple[OntologySchema, SemanticGraph]:
    return load_graph(
        fixture_path(name, "ontology.txt"),
        fixture_path(name, "nodes.csv"),
        fixture_path(name, "links.csv"),
    )


def make_graph(
    node_types: dict[str, str],
    edges: list[tuple[str, str]],
    schema: Optional[OntologySchema] = None,
    link_type: str = "related",
) -> SemanticGraph:
    """Graph from {id: type} and undirected edges, over a complete schema by default."""
    if schema is None:
        schema = OntologySchema.complete(set(node_types.values()) or {"node"}, link_type)
    nodes = [NodeRecord(i, t) for i, t in node_types.items()]
    links = [LinkRecord(a, b, link_type) for a, b in edges]
    return build_graph(nodes, links, schema)


def random_typed_graph(seed: int, max_nodes: int = 50, max_types: int = 6) -> tuple[OntologySchema, SemanticGraph]:
    """Random ontology plus a random graph; links may break the ontology."""
    rng = random.Random(seed)
    types = [f"t{i}" for i in range(rng.randint(1, max_types))]
    triples = [
        (a, "rel", b)
        for a, b in itertools.combinations_with_replacement(types, 2)
        if rng.random() < 0.6
    ]
    schema = OntologySchema.build(types, ["rel"], triples)

    n = rng.randint(1, max_nodes)
    nodes = [NodeRecord(f"v{i}", rng.choice(types)) for i in range(n)]
    p = rng.uniform(0.02, 0.4)
    links = [
        LinkRecord(f"v{i}", f"v{j}", rng.choice(["rel", "other"]))
        for i, j in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return schema, build_graph(nodes, links, schema)


@pytest.fixture
def meetings() -> tuple[OntologySchema, SemanticGraph]:
    return load_fixture("meetings")


@pytest.fixture
def movies() -> tuple[OntologySchema, SemanticGraph]:
    return load_fixture("movies")


@pytest.fixture
def diamond() -> tuple[OntologySchema, SemanticGraph]:
    return load_fixture("diamond")


@pytest.fixture
def random_graphs() -> Callable[[int], list[tuple[OntologySchema, SemanticGraph]]]:
    def factory(count: int, **kwargs) -> list[tuple[OntologySchema, SemanticGraph]]:
        return [random_typed_graph(seed, **kwargs) for seed in range(count)]
    return factory
