from __future__ import annotations

import dataclasses
import itertools
import statistics

import pytest

from semgraph.core import GraphError, OntologyError, OntologySchema, UndefinedMeasureError
from semgraph.ingest import export_graph, parse_graph_document
from semgraph.stats import (
    YrMode,
    allowed_neighbor_pairs,
    clustering_coefficient,
    degree_distribution,
    disparity,
    graph_clustering,
    linked_neighbor_pairs,
    random_disparity,
    rank_by_clustering,
    semantic_clustering,
    transitivity,
    type_degree_stats,
    type_stats_report,
)
from tests.conftest import make_graph


def approx(value):
    return pytest.approx(value, rel=1e-12, abs=1e-12)


def restricted_schema() -> OntologySchema:
    # delta may only link to alpha
    return OntologySchema.build(
        ["alpha", "beta", "gamma", "delta"],
        ["r"],
        [
            ("alpha", "r", "beta"),
            ("alpha", "r", "gamma"),
            ("alpha", "r", "delta"),
            ("beta", "r", "gamma"),
        ],
    )


def restricted_graph():
    schema = restricted_schema()
    graph = make_graph(
        {"i": "alpha", "b": "beta", "g": "gamma", "d": "delta"},
        [("i", "b"), ("i", "g"), ("i", "d"), ("b", "g")],
        schema,
        link_type="r",
    )
    return schema, graph


# ==========================================
# Brute-force oracles
# ==========================================


def oracle_clustering(graph, i) -> float:
    neighbors = sorted(graph.neighbors(i))
    k = len(neighbors)
    if k < 2:
        return 0.0
    linked = sum(1 for a, b in itertools.combinations(neighbors, 2) if graph.has_link(a, b))
    return linked / (k * (k - 1) / 2)


def oracle_allowed_pairs(graph, schema, i) -> int:
    allowed = {(s, d) for s, _, d in schema.declared} | {(d, s) for s, _, d in schema.declared}
    return sum(
        1
        for a, b in itertools.combinations(sorted(graph.neighbors(i)), 2)
        if (graph.node_type(a), graph.node_type(b)) in allowed
    )


def oracle_linked_pairs(graph, i) -> int:
    return sum(1 for a, b in itertools.combinations(sorted(graph.neighbors(i)), 2) if graph.has_link(a, b))


def oracle_neighbor_types(schema, alpha) -> set[str]:
    found = set()
    for s, _, d in schema.declared:
        if s == alpha:
            found.add(d)
        if d == alpha:
            found.add(s)
    return found


def oracle_disparity(graph, i) -> float:
    neighbors = list(graph.neighbors(i))
    k = len(neighbors)
    types = [graph.node_type(j) for j in neighbors]
    return sum((types.count(t) / k) ** 2 for t in set(types))


def oracle_type_row(graph, schema, alpha, mode) -> dict:
    members = [i for i in graph if graph.node_type(i) == alpha]
    degrees = [len(graph.neighbors(i)) for i in members]
    base = len(oracle_neighbor_types(schema, alpha))
    row = {"count": len(members), "base_degree": base}
    if degrees:
        mean = statistics.fmean(degrees)
        spread = statistics.pstdev(degrees)
        row["mean_degree"] = mean
        row["second_moment"] = statistics.fmean([d * d for d in degrees])
        row["per_type_degree"] = mean / base if base else None
        row["sigma_k"] = spread / base if base else None
    else:
        row.update(mean_degree=None, second_moment=None, per_type_degree=None, sigma_k=None)

    ys = [oracle_disparity(graph, i) for i in members if graph.neighbors(i)]
    populations = [sum(1 for j in graph if graph.node_type(j) == beta) for beta in oracle_neighbor_types(schema, alpha)]
    total = len(graph.nodes) if mode == "literal" else sum(populations)
    yr = sum((p / total) ** 2 for p in populations) if total else 0.0
    row["disparity_nodes"] = len(ys)
    row["random_disparity"] = yr
    row["mean_disparity"] = statistics.fmean(ys) if ys else None
    row["sigma_y"] = statistics.pstdev(ys) if ys else None
    row["r"] = row["mean_disparity"] / yr if ys and yr > 0 else None
    row["sigma_r"] = row["sigma_y"] / yr if ys and yr > 0 else None
    return row


# ==========================================
# Clustering
# ==========================================


def test_complete_graph_has_clustering_one() -> None:
    nodes = {f"v{i}": "node" for i in range(4)}
    graph = make_graph(nodes, list(itertools.combinations(nodes, 2)))
    assert graph_clustering(graph) == 1.0
    assert all(clustering_coefficient(graph, i) == 1.0 for i in graph)
    assert transitivity(graph) == 1.0


def test_tree_has_clustering_zero() -> None:
    nodes = {f"v{i}": "node" for i in range(7)}
    edges = [("v0", "v1"), ("v0", "v2"), ("v1", "v3"), ("v1", "v4"), ("v2", "v5"), ("v2", "v6")]
    graph = make_graph(nodes, edges)
    assert graph_clustering(graph) == 0.0
    assert transitivity(graph) == 0.0


def test_triangle_with_pendant() -> None:
    graph = make_graph(
        {"a": "node", "b": "node", "c": "node", "d": "node"},
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")],
    )
    assert clustering_coefficient(graph, "a") == approx(1 / 3)
    assert clustering_coefficient(graph, "b") == 1.0
    assert clustering_coefficient(graph, "d") == 0.0
    assert graph_clustering(graph) == approx(7 / 12)
    assert transitivity(graph) == approx(3 / 5)


def test_clustering_of_empty_graph_is_an_error() -> None:
    with pytest.raises(GraphError):
        graph_clustering(make_graph({}, []))


def test_ontology_discounts_forbidden_pairs() -> None:
    schema, graph = restricted_graph()
    assert linked_neighbor_pairs(graph, "i") == 1
    assert allowed_neighbor_pairs(graph, schema, "i") == 1
    assert semantic_clustering(graph, schema, "i") == 1.0
    assert clustering_coefficient(graph, "i") == approx(1 / 3)


def test_mutually_forbidden_neighbors_give_zero() -> None:
    schema = OntologySchema.build(["hub", "x", "y"], ["r"], [("hub", "r", "x"), ("hub", "r", "y")])
    graph = make_graph({"h": "hub", "x1": "x", "y1": "y"}, [("h", "x1"), ("h", "y1")], schema, link_type="r")
    assert allowed_neighbor_pairs(graph, schema, "h") == 0
    assert semantic_clustering(graph, schema, "h") == 0.0


def test_semantic_ranking_differs_from_plain() -> None:
    schema, graph = restricted_graph()
    plain = rank_by_clustering(graph, top=1)
    semantic = rank_by_clustering(graph, schema, top=4)
    assert plain[0].node_id in {"b", "g"}
    assert [r.node_id for r in semantic if r.value == 1.0] == ["i", "b", "g"]


def test_complete_ontology_reduces_to_plain_clustering(random_graphs) -> None:
    for _, graph in random_graphs(40):
        complete = OntologySchema.complete(graph.type_counts)
        for i in graph:
            if graph.degree(i) >= 2:
                assert semantic_clustering(graph, complete, i) == approx(clustering_coefficient(graph, i))


def test_clustering_matches_brute_force(random_graphs) -> None:
    for schema, graph in random_graphs(200):
        for i in graph:
            assert linked_neighbor_pairs(graph, i) == oracle_linked_pairs(graph, i)
            assert clustering_coefficient(graph, i) == approx(oracle_clustering(graph, i))
            allowed = oracle_allowed_pairs(graph, schema, i)
            assert allowed_neighbor_pairs(graph, schema, i) == allowed
            expected = oracle_linked_pairs(graph, i) / allowed if allowed else 0.0
            assert semantic_clustering(graph, schema, i) == approx(expected)


# ==========================================
# Disparity
# ==========================================


@pytest.mark.parametrize(
    "neighbor_types, expected",
    [
        (["beta"] * 5, 1.0),
        (["beta", "beta", "gamma", "gamma"], 0.5),
        (["beta", "beta", "beta", "gamma"], 0.625),
    ],
)
def test_disparity_examples(neighbor_types, expected) -> None:
    nodes = {"i": "alpha"}
    nodes.update({f"n{k}": t for k, t in enumerate(neighbor_types)})
    graph = make_graph(nodes, [("i", f"n{k}") for k in range(len(neighbor_types))])
    assert disparity(graph, "i") == approx(expected)


def test_disparity_of_isolated_node_is_undefined() -> None:
    graph = make_graph({"i": "alpha"}, [])
    with pytest.raises(UndefinedMeasureError):
        disparity(graph, "i")


def test_disparity_bounds(random_graphs) -> None:
    for _, graph in random_graphs(50):
        for i in graph:
            if graph.degree(i) == 0:
                continue
            present = {graph.node_type(j) for j in graph.neighbors(i)}
            value = disparity(graph, i)
            assert 1 / len(present) - 1e-12 <= value <= 1 + 1e-12
            if len(present) == 1:
                assert value == approx(1.0)


def test_random_disparity_modes() -> None:
    schema = OntologySchema.build(["a", "b", "c"], ["r"], [("a", "r", "b"), ("a", "r", "c")])
    graph = make_graph({"a1": "a", "b1": "b", "b2": "b", "c1": "c"}, [], schema, link_type="r")
    # V(a) = {b, c}: populations 2 and 1 out of 4 nodes
    assert random_disparity(graph, schema, "a", YrMode.LITERAL) == approx((2 / 4) ** 2 + (1 / 4) ** 2)
    assert random_disparity(graph, schema, "a", YrMode.NORMALIZED) == approx((2 / 3) ** 2 + (1 / 3) ** 2)


def test_ratio_is_undefined_without_neighbor_type_nodes() -> None:
    schema = OntologySchema.build(["a", "b", "c"], ["r"], [("a", "r", "b"), ("c", "r", "c")])
    graph = make_graph({"c1": "c", "c2": "c", "a1": "a"}, [("c1", "c2")], schema, link_type="r")
    row = type_stats_report(graph, schema).row("a")
    assert row.random_disparity == 0.0
    assert row.r is None
    assert row.sigma_r is None


def test_random_disparity_worked_values() -> None:
    schema = OntologySchema.build(
        ["a", "b", "c", "d"], ["r"], [("a", "r", "b"), ("a", "r", "c"), ("d", "r", "d")]
    )
    types = {f"b{i}": "b" for i in range(4)} | {f"c{i}": "c" for i in range(6)}
    graph = make_graph(types, [], schema, link_type="r")
    assert graph.n == 10
    assert random_disparity(graph, schema, "a", YrMode.LITERAL) == approx(0.52)
    assert random_disparity(graph, schema, "a", YrMode.NORMALIZED) == approx(0.52)

    # ten more nodes of an unrelated type only dilute the literal baseline
    padded = make_graph(types | {f"d{i}": "d" for i in range(10)}, [], schema, link_type="r")
    assert padded.n == 20
    assert random_disparity(padded, schema, "a", YrMode.LITERAL) == approx(0.13)
    assert random_disparity(padded, schema, "a", YrMode.NORMALIZED) == approx(0.52)


# ==========================================
# Per-type report
# ==========================================


def test_degree_distribution() -> None:
    graph = make_graph(
        {"a1": "alpha", "a2": "alpha", "a3": "alpha", "b1": "beta", "b2": "beta"},
        [("a1", "b1"), ("a2", "b1"), ("a3", "b1"), ("a3", "b2")],
    )
    distribution = degree_distribution(graph, "alpha")
    assert distribution.frequencies == {1: 2, 2: 1}
    assert distribution.probabilities() == {1: approx(2 / 3), 2: approx(1 / 3)}
    assert distribution.mean() == approx(4 / 3)


def test_degree_distribution_of_unknown_type(meetings) -> None:
    _, graph = meetings
    with pytest.raises(OntologyError) as excinfo:
        degree_distribution(graph, "weapon")
    assert excinfo.value.type_name == "weapon"


def test_meetings_type_report(meetings) -> None:
    schema, graph = meetings
    report = type_stats_report(graph, schema)
    person = report.row("person")
    # person degrees: p1=4, p2=3, p3=3, p4=2, p5=2
    assert person.count == 5
    assert person.base_degree == 3
    assert person.mean_degree == approx(14 / 5)
    assert person.per_type_degree == approx(14 / 15)
    assert person.sigma_k == approx(statistics.pstdev([4, 3, 3, 2, 2]) / 3)
    assert person.significant is False
    assert report.node_types == ["city", "meeting", "person"]


def test_per_type_degree_worked_values() -> None:
    schema = OntologySchema.build(["a", "b", "c"], ["r"], [("a", "r", "b"), ("a", "r", "c")])
    graph = make_graph(
        {"a1": "a", "a2": "a", "b1": "b", "b2": "b", "c1": "c"},
        [("a1", "b1"), ("a1", "b2"), ("a1", "c1"), ("a2", "b1")],
        schema,
        link_type="r",
    )
    row = type_degree_stats(graph, schema).row("a")
    # degrees 3 and 1 against k0 = 2
    assert row.base_degree == 2
    assert row.mean_degree == approx(2.0)
    assert row.per_type_degree == approx(1.0)
    assert row.sigma_k == approx(0.5)


def test_per_type_degree_of_isolated_nodes() -> None:
    schema = OntologySchema.build(["a", "b", "c"], ["r"], [("a", "r", "b"), ("a", "r", "c")])
    graph = make_graph({"a1": "a", "a2": "a", "b1": "b"}, [], schema, link_type="r")
    row = type_degree_stats(graph, schema).row("a")
    assert row.count == 2
    assert row.per_type_degree == 0.0
    assert row.sigma_k == 0.0


@pytest.mark.parametrize("name", ["meetings", "movies"])
def test_type_report_survives_graph_document(name: str, request) -> None:
    schema, graph = request.getfixturevalue(name)
    rebuilt = parse_graph_document(export_graph(graph))
    for mode in YrMode:
        before = type_stats_report(graph, schema, mode)
        after = type_stats_report(rebuilt, rebuilt.schema, mode)
        assert after.node_types == before.node_types
        for ours, theirs in zip(before.rows, after.rows):
            for field in dataclasses.fields(ours):
                expected = getattr(ours, field.name)
                if isinstance(expected, float):
                    assert getattr(theirs, field.name) == approx(expected)
                else:
                    assert getattr(theirs, field.name) == expected


def test_type_report_matches_brute_force(random_graphs) -> None:
    for schema, graph in random_graphs(200):
        for mode in ("literal", "normalized"):
            report = type_stats_report(graph, schema, mode, significant_count=3)
            assert report.yr_mode.value == mode
            for row in report.rows:
                expected = oracle_type_row(graph, schema, row.node_type, mode)
                assert row.significant == (row.count >= 3)
                for name, value in expected.items():
                    actual = getattr(row, name)
                    if value is None:
                        assert actual is None, (name, row)
                    elif isinstance(value, int):
                        assert actual == value, (name, row)
                    else:
                        assert actual == approx(value), (name, row)
