from __future__ import annotations

import pytest

from semgraph.core import LinkRecord, NodeRecord, OntologySchema, build_graph
from semgraph.ingest import export_graph
from semgraph.stats import type_stats_report
from semgraph.transform import (
    ORIGINAL_TYPE,
    SHARED_COUNT,
    SHARED_VIA,
    TransformError,
    TypeMergeMap,
    coarsen,
    one_mode_projection,
    projection_link_type,
)
from tests.conftest import make_graph


def terror_graph():
    schema = OntologySchema.build(
        ["ReligiousTerrOrg", "PoliticalTerrOrg", "Person"],
        [],
        [("Person", "member-of", "ReligiousTerrOrg"), ("Person", "member-of", "PoliticalTerrOrg")],
    )
    nodes = [
        NodeRecord("r1", "ReligiousTerrOrg"),
        NodeRecord("r2", "ReligiousTerrOrg"),
        NodeRecord("o1", "PoliticalTerrOrg"),
        NodeRecord("x", "Person"),
    ]
    links = [LinkRecord("x", "r1", "member-of"), LinkRecord("x", "o1", "member-of")]
    return schema, build_graph(nodes, links, schema)


def test_coarsening_sums_type_counts() -> None:
    schema, graph = terror_graph()
    merge_map = TypeMergeMap({
        "ReligiousTerrOrg": "TerroristOrg",
        "PoliticalTerrOrg": "TerroristOrg",
        "Person": "Person",
    })
    coarse, coarse_schema = coarsen(graph, schema, merge_map)
    assert coarse.type_count("TerroristOrg") == 3
    assert coarse_schema.node_types == {"TerroristOrg", "Person"}
    assert coarse_schema.declared == {("Person", "member-of", "TerroristOrg")}
    assert coarse.node("r1").attributes == {ORIGINAL_TYPE: "ReligiousTerrOrg"}
    assert coarse.links == graph.links
    type_stats_report(coarse, coarse_schema)


def test_identity_map_leaves_the_graph_unchanged(meetings) -> None:
    schema, graph = meetings
    identity = TypeMergeMap({}).with_identity(schema.node_types)
    coarse, coarse_schema = coarsen(graph, schema, identity)
    assert coarse_schema == schema
    assert export_graph(coarse) == export_graph(graph)


def test_partial_map_is_an_error() -> None:
    schema, graph = terror_graph()
    with pytest.raises(TransformError) as excinfo:
        coarsen(graph, schema, TypeMergeMap({"Person": "Person"}))
    assert excinfo.value.detail == "PoliticalTerrOrg,ReligiousTerrOrg"


def actor_graph(edges):
    nodes = {"a1": "actor", "a2": "actor", "a3": "actor", "m1": "movie", "m2": "movie", "c": "country"}
    schema = OntologySchema.complete(["actor", "movie", "country"])
    return make_graph(nodes, edges, schema)


def test_actors_sharing_a_movie_are_linked() -> None:
    projected = one_mode_projection(actor_graph([("a1", "m1"), ("a2", "m1")]), "actor", "movie")
    assert projected.has_link("a1", "a2")
    assert not projected.has_link("a1", "a3")
    assert projected.type_counts == {"actor": 3}
    assert projected.links[0].link_type == projection_link_type("movie")


def test_shared_count_on_projected_links() -> None:
    graph = actor_graph([("a1", "m1"), ("a2", "m1"), ("a1", "m2"), ("a2", "m2"), ("m1", "c")])
    projected = one_mode_projection(graph, "actor", "movie")
    assert len(projected.links) == 1
    link = projected.links[0]
    assert (link.source, link.target) == ("a1", "a2")
    assert link.attributes[SHARED_COUNT] == "2"
    assert link.attributes[SHARED_VIA] == "m1|m2"


def test_projection_of_a_non_bipartite_slice() -> None:
    graph = actor_graph([("a1", "m1"), ("a1", "a2")])
    with pytest.raises(TransformError):
        one_mode_projection(graph, "actor", "movie")


def test_projection_via_the_same_type() -> None:
    with pytest.raises(TransformError) as excinfo:
        one_mode_projection(actor_graph([]), "actor", "actor")
    assert excinfo.value.message == "Cannot project type actor via itself"
    assert excinfo.value.detail is None
