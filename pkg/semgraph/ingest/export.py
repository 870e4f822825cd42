"""Canonical graph document: schema, nodes and links in one YAML text, sorted by id."""

import yaml

from semgraph.core.errors import GraphError, OntologyError
from semgraph.core.graph import LinkRecord, NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.ingest.errors import FileFormatError

DOCUMENT_FORMAT = "semgraph-graph/1"


def _link_sort_key(link: LinkRecord) -> tuple:
    return (link.source, link.target, link.link_type, sorted(link.attributes.items()))


def export_graph(graph: SemanticGraph) -> str:
    """Serialize a graph. parse_graph_document(export_graph(g)) rebuilds an equal graph."""
    schema = graph.schema
    document = {
        "format": DOCUMENT_FORMAT,
        "metadata": dict(sorted(graph.metadata.items())),
        "schema": {
            "node_types": sorted(schema.node_types),
            "link_types": sorted(schema.link_types),
            "allowed": [list(t) for t in sorted(schema.declared)],
        },
        "nodes": [
            {
                "id": node.id,
                "type": node.node_type,
                "attributes": dict(sorted(node.attributes.items())),
            }
            for node in sorted(graph.nodes.values(), key=lambda n: n.id)
        ],
        "links": [
            {
                "source": link.source,
                "target": link.target,
                "type": link.link_type,
                "attributes": dict(sorted(link.attributes.items())),
            }
            for link in sorted(graph.links, key=_link_sort_key)
        ],
    }
    return yaml.safe_dump(document, sort_keys=False, allow_unicode=True, default_flow_style=False)


def parse_graph_document(text: str, source: str = "<graph>") -> SemanticGraph:
    """Rebuild a graph from its canonical document."""
    try:
        document = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        line = e.problem_mark.line + 1 if e.problem_mark else 1
        raise FileFormatError(source, line, str(e.problem)) from e

    if not isinstance(document, dict) or document.get("format") != DOCUMENT_FORMAT:
        raise FileFormatError(source, 1, f"not a {DOCUMENT_FORMAT} document")

    try:
        schema_doc = document["schema"]
        schema = OntologySchema.build(
            schema_doc["node_types"],
            schema_doc["link_types"],
            [tuple(t) for t in schema_doc["allowed"]],
        )
        nodes = [
            NodeRecord(str(n["id"]), str(n["type"]), {str(k): str(v) for k, v in (n.get("attributes") or {}).items()})
            for n in document.get("nodes") or []
        ]
        links = [
            LinkRecord(
                str(l["source"]),
                str(l["target"]),
                str(l["type"]),
                {str(k): str(v) for k, v in (l.get("attributes") or {}).items()},
            )
            for l in document.get("links") or []
        ]
        metadata = {str(k): str(v) for k, v in (document.get("metadata") or {}).items()}
    except (KeyError, TypeError) as e:
        raise FileFormatError(source, 1, f"missing or malformed section: {e}") from e
    except OntologyError as e:
        raise FileFormatError(source, 1, e.message) from e

    try:
        return build_graph(nodes, links, schema, metadata=metadata)
    except GraphError as e:
        raise FileFormatError(source, 1, e.message) from e
