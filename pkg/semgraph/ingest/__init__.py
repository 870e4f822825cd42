"""Text formats: ontology directives, node/link CSV files, canonical export."""

from semgraph.ingest.errors import FileFormatError, IngestError  # noqa: F401
from semgraph.ingest.parser import (  # noqa: F401
    load_graph,
    parse_links,
    parse_merge_map,
    parse_nodes,
    parse_ontology,
)
from semgraph.ingest.export import export_graph, parse_graph_document  # noqa: F401
