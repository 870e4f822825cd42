from __future__ import annotations

import pytest

from semgraph.core import (
    DuplicateNodeError,
    GraphError,
    LinkRecord,
    NodeRecord,
    OntologyError,
    OntologySchema,
    SelfLoopError,
    UnknownNodeError,
    allowed_neighbor_types,
    build_graph,
    check_invariants,
    neighbors_by_type,
    validate,
)
from semgraph.core.graph import neighbor_type_counts


def meetings_schema() -> OntologySchema:
    return OntologySchema.build(
        ["person", "meeting", "city"],
        [],
        [
            ("person", "knows", "person"),
            ("person", "attended", "meeting"),
            ("person", "born-in", "city"),
            ("meeting", "held-in", "city"),
        ],
    )


def test_single_node_without_links() -> None:
    graph = build_graph([NodeRecord("a", "person")], [], meetings_schema())
    assert graph.n == 1
    assert graph.links == ()
    assert graph.degree("a") == 0


def test_single_link_gives_degree_one() -> None:
    graph = build_graph(
        [NodeRecord("a", "person"), NodeRecord("b", "person")],
        [LinkRecord("a", "b", "knows")],
        meetings_schema(),
    )
    assert graph.degree("a") == 1
    assert graph.degree("b") == 1
    assert graph.neighbors("a") == {"b"}


def test_duplicate_node_id_is_rejected() -> None:
    with pytest.raises(DuplicateNodeError) as excinfo:
        build_graph([NodeRecord("a", "person"), NodeRecord("a", "city")], [], meetings_schema())
    assert excinfo.value.node_id == "a"


def test_self_loop_is_rejected() -> None:
    with pytest.raises(SelfLoopError):
        build_graph([NodeRecord("p1", "person")], [LinkRecord("p1", "p1", "knows")], meetings_schema())


def test_link_to_missing_node_is_rejected() -> None:
    with pytest.raises(GraphError) as excinfo:
        build_graph([NodeRecord("p1", "person")], [LinkRecord("p1", "p2", "knows")], meetings_schema())
    assert excinfo.value.node_id == "p2"


def test_unknown_node_lookup() -> None:
    graph = build_graph([NodeRecord("a", "person")], [], meetings_schema())
    with pytest.raises(UnknownNodeError):
        graph.neighbors("zz")


def test_parallel_links_collapse_in_the_view() -> None:
    graph = build_graph(
        [NodeRecord("a", "person"), NodeRecord("b", "person")],
        [LinkRecord("a", "b", "knows"), LinkRecord("b", "a", "likes")],
        meetings_schema(),
    )
    assert graph.degree("a") == 1
    assert graph.linked_pairs() == 1
    assert len(graph.links) == 2
    assert graph.link_types_between("a", "b") == {"knows", "likes"}
    assert graph.view.edges["a", "b"]["multiplicity"] == 2


def test_allowed_neighbor_types_follow_the_ontology() -> None:
    schema = meetings_schema()
    assert allowed_neighbor_types(schema, "person") == {"person", "meeting", "city"}
    assert schema.base_degree("person") == 3
    assert allowed_neighbor_types(schema, "meeting") == {"person", "city"}
    assert schema.base_degree("meeting") == 2


def test_type_with_no_triples_has_no_neighbor_types() -> None:
    schema = OntologySchema.build(["person", "weapon"], [], [("person", "knows", "person")])
    assert allowed_neighbor_types(schema, "weapon") == frozenset()
    assert schema.base_degree("weapon") == 0


def test_triple_with_undeclared_type_is_rejected() -> None:
    with pytest.raises(OntologyError):
        OntologySchema.build(["person"], [], [("person", "owns", "weapon")])


def test_complete_schema_allows_every_pair() -> None:
    schema = OntologySchema.complete(["a", "b"])
    assert schema.types_can_link("a", "a")
    assert schema.types_can_link("a", "b")
    assert schema.allows("b", "related", "a")


def test_conforming_link_has_no_violations() -> None:
    schema = meetings_schema()
    graph = build_graph(
        [NodeRecord("p", "person"), NodeRecord("m", "meeting")],
        [LinkRecord("p", "m", "attended")],
        schema,
    )
    assert validate(graph, schema) == []


def test_reversed_orientation_is_allowed() -> None:
    schema = meetings_schema()
    graph = build_graph(
        [NodeRecord("p", "person"), NodeRecord("m", "meeting")],
        [LinkRecord("m", "p", "attended")],
        schema,
    )
    assert validate(graph, schema) == []


def test_meeting_meeting_link_is_one_violation() -> None:
    schema = meetings_schema()
    graph = build_graph(
        [NodeRecord("m1", "meeting"), NodeRecord("m2", "meeting")],
        [LinkRecord("m1", "m2", "attended")],
        schema,
    )
    violations = validate(graph, schema)
    assert len(violations) == 1
    assert violations[0].kind == "link"
    assert violations[0].subject == "m1-m2"


def test_undeclared_node_type_is_reported() -> None:
    schema = meetings_schema()
    graph = build_graph([NodeRecord("w", "weapon")], [], schema)
    violations = validate(graph, schema)
    assert [(v.kind, v.subject) for v in violations] == [("node_type", "w")]


def test_empty_graph_has_no_violations() -> None:
    schema = meetings_schema()
    assert validate(build_graph([], [], schema), schema) == []


def test_bundled_fixture_conforms(meetings) -> None:
    schema, graph = meetings
    assert validate(graph, schema) == []
    assert graph.type_counts == {"person": 5, "meeting": 2, "city": 2}


def test_neighbors_by_type_on_a_star() -> None:
    schema = meetings_schema()
    nodes = [NodeRecord("p", "person"), NodeRecord("m", "meeting")]
    nodes += [NodeRecord(f"c{i}", "city") for i in range(3)]
    links = [LinkRecord("p", f"c{i}", "born-in") for i in range(3)]
    links.append(LinkRecord("p", "m", "attended"))
    graph = build_graph(nodes, links, schema)

    assert neighbors_by_type(graph, "p", "city") == 3
    assert neighbors_by_type(graph, "p", "meeting") == 1
    assert neighbors_by_type(graph, "p", "person") == 0


def test_isolated_node_has_no_neighbors_of_any_type(meetings) -> None:
    schema, _ = meetings
    graph = build_graph([NodeRecord("p", "person")], [], schema)
    for node_type in schema.node_types:
        assert neighbors_by_type(graph, "p", node_type) == 0


def test_per_type_counts_sum_to_degree(random_graphs) -> None:
    for _, graph in random_graphs(30):
        for i in graph:
            assert sum(neighbor_type_counts(graph, i).values()) == graph.degree(i)
        assert sum(graph.type_counts.values()) == graph.n
        check_invariants(graph)


def test_relabel_collapses_types() -> None:
    schema = meetings_schema().relabel({"person": "person", "meeting": "event", "city": "place"})
    assert schema.node_types == {"person", "event", "place"}
    assert schema.allows("event", "held-in", "place")
