from __future__ import annotations

import random

import pytest

from semgraph.core import LinkRecord, NodeRecord, OntologySchema, UnknownNodeError, build_graph, check_invariants
from semgraph.relevance import prune_candidates, prune_irrelevant, prune_node, prune_nodes
from semgraph.stats import type_stats_report


def city_graph():
    schema = OntologySchema.build(["person", "city"], [], [("person", "born-in", "city"), ("person", "knows", "person")])
    nodes = [
        NodeRecord("p1", "person", {"city": "lima"}),
        NodeRecord("p2", "person"),
        NodeRecord("p3", "person"),
        NodeRecord("sf", "city"),
        NodeRecord("lonely", "city"),
    ]
    links = [
        LinkRecord("p1", "sf", "born-in"),
        LinkRecord("p2", "sf", "born-in"),
        LinkRecord("p2", "p3", "knows"),
    ]
    return build_graph(nodes, links, schema)


def test_pruned_node_becomes_an_attribute() -> None:
    pruned = prune_node(city_graph(), "sf", "city")
    assert "sf" not in pruned
    assert all("sf" not in (l.source, l.target) for l in pruned.links)
    assert pruned.node("p2").attributes == {"city": "sf"}
    assert pruned.degree("p2") == 1


def test_existing_attribute_values_are_appended() -> None:
    pruned = prune_node(city_graph(), "sf", "city", separator="|")
    assert pruned.node("p1").attributes == {"city": "lima|sf"}


def test_pruning_an_isolated_node() -> None:
    graph = city_graph()
    pruned = prune_node(graph, "lonely", "city")
    assert pruned.n == graph.n - 1
    assert pruned.links == graph.links
    for i in pruned:
        assert pruned.node(i) == graph.node(i)


def test_pruning_an_unknown_node() -> None:
    with pytest.raises(UnknownNodeError):
        prune_node(city_graph(), "nowhere", "city")


def test_pruning_leaves_the_input_untouched() -> None:
    graph = city_graph()
    prune_node(graph, "sf", "city")
    assert "sf" in graph
    assert graph.node("p2").attributes == {}


def test_prune_candidates_and_prune_irrelevant() -> None:
    graph = city_graph()
    # p2 and sf both have two unrelated neighbors, so C = 0; p1 has degree 1
    assert prune_candidates(graph, graph.schema, tau=0.1) == ["p2", "sf"]
    pruned = prune_irrelevant(graph, graph.schema, tau=0.1)
    assert sorted(pruned) == ["lonely", "p1", "p3"]
    assert pruned.node("p1").attributes == {"city": "lima|sf"}
    assert pruned.node("p3").attributes == {"person": "p2"}
    assert pruned.links == ()


def test_random_pruning_is_sound(random_graphs) -> None:
    rng = random.Random(11)
    for schema, graph in random_graphs(60):
        targets = rng.sample(sorted(graph), k=min(len(graph), rng.randint(1, 3)))
        names = {t: f"was_{graph.node_type(t)}" for t in targets}
        pruned = prune_nodes(graph, names)

        assert all(t not in pruned for t in targets)
        for link in pruned.links:
            assert link.source not in targets and link.target not in targets

        for i in pruned:
            before = graph.node(i).attributes
            after = pruned.node(i).attributes
            added = sum(
                len(after[k].split("|")) - (len(before[k].split("|")) if k in before else 0)
                for k in after
            )
            expected = sum(1 for t in targets if t in graph.neighbors(i))
            assert added == expected

        check_invariants(pruned)
        if pruned.n:
            type_stats_report(pruned, schema)
