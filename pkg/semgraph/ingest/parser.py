"""Parsers for ontology, node, link and merge-map files.

Node and link files are UTF-8 CSV with a header line. Lines starting with `#`
are comments. Attribute cells hold `key=value` pairs separated by `;`.
"""

import csv
import logging
from pathlib import Path
from typing import Iterator, Optional

from semgraph.core.errors import OntologyError
from semgraph.core.graph import LinkRecord, NodeRecord, SemanticGraph, build_graph
from semgraph.core.ontology import OntologySchema
from semgraph.ingest.errors import FileFormatError, IngestError
from semgraph.transform.merge import TypeMergeMap

logger = logging.getLogger(__name__)

ATTRIBUTE_COLUMN = "attributes"


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, line) for every non-blank, non-comment line."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, line


def _csv_rows(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, line in _data_lines(text):
        row = next(csv.reader([line]))
        yield number, [cell.strip() for cell in row]


def _parse_attributes(
    cells: list[str],
    columns: list[str],
    source: str,
    line: int,
) -> dict[str, str]:
    attributes: dict[str, str] = {}
    for index, cell in enumerate(cells):
        if not cell:
            continue
        column = columns[index] if index < len(columns) else ATTRIBUTE_COLUMN
        for part in cell.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" in part:
                key, value = part.split("=", 1)
                key = key.strip()
                if not key:
                    raise FileFormatError(source, line, f"attribute with empty name: {part!r}")
                attributes[key] = value.strip()
            elif column and column != ATTRIBUTE_COLUMN:
                attributes[column] = part
            else:
                raise FileFormatError(source, line, f"attribute must be key=value, got {part!r}")
    return attributes


def parse_ontology(text: str, source: str = "<ontology>") -> OntologySchema:
    """Parse `nodetype`, `linktype`, `allow a,L,b` and `link a L b` directives."""
    node_types: set[str] = set()
    link_types: set[str] = set()
    triples: list[tuple[int, tuple[str, str, str]]] = []

    for number, line in _data_lines(text):
        directive, _, rest = line.strip().partition(" ")
        rest = rest.strip()
        if directive == "nodetype":
            if not rest or " " in rest:
                raise FileFormatError(source, number, f"expected 'nodetype NAME', got {line.strip()!r}")
            node_types.add(rest)
        elif directive == "linktype":
            if not rest or " " in rest:
                raise FileFormatError(source, number, f"expected 'linktype NAME', got {line.strip()!r}")
            link_types.add(rest)
        elif directive in ("allow", "link"):
            parts = [p.strip() for p in (rest.split(",") if directive == "allow" else rest.split())]
            if len(parts) != 3 or not all(parts):
                raise FileFormatError(source, number, f"expected '{directive}' with source, link type, target")
            triples.append((number, (parts[0], parts[1], parts[2])))
        else:
            raise FileFormatError(source, number, f"unknown directive {directive!r}")

    for number, (src, link, dst) in triples:
        for type_name in (src, dst):
            if type_name not in node_types:
                raise FileFormatError(source, number, f"undeclared node type {type_name!r}")

    try:
        schema = OntologySchema.build(node_types, link_types, [t for _, t in triples])
    except OntologyError as e:
        raise FileFormatError(source, 1, e.message) from e

    logger.info(
        "Parsed ontology %s: %d node types, %d link types, %d triples",
        source, len(schema.node_types), len(schema.link_types), len(schema.declared),
    )
    return schema


def parse_nodes(text: str, source: str = "<nodes>") -> list[NodeRecord]:
    """One NodeRecord per data row: id, type, then attribute columns."""
    rows = _csv_rows(text)
    header = next(rows, None)
    if header is None:
        return []
    _, columns = header
    if len(columns) < 2:
        raise FileFormatError(source, header[0], "header needs at least id and type columns")

    nodes: list[NodeRecord] = []
    seen: set[str] = set()
    for number, cells in rows:
        if len(cells) < 2 or not cells[0]:
            raise FileFormatError(source, number, "missing node id")
        if not cells[1]:
            raise FileFormatError(source, number, f"missing type for node {cells[0]!r}")
        if cells[0] in seen:
            raise FileFormatError(source, number, f"duplicate node id {cells[0]!r}")
        seen.add(cells[0])
        attributes = _parse_attributes(cells[2:], columns[2:], source, number)
        nodes.append(NodeRecord(cells[0], cells[1], attributes))
    return nodes


def parse_links(text: str, source: str = "<links>") -> list[LinkRecord]:
    """One LinkRecord per data row: source, target, link type, then attributes."""
    rows = _csv_rows(text)
    header = next(rows, None)
    if header is None:
        return []
    _, columns = header

    links: list[LinkRecord] = []
    for number, cells in rows:
        if len(cells) < 3:
            raise FileFormatError(source, number, f"expected source,target,link_type; got {len(cells)} fields")
        if not all(cells[:3]):
            raise FileFormatError(source, number, "empty source, target or link type")
        attributes = _parse_attributes(cells[3:], columns[3:], source, number)
        links.append(LinkRecord(cells[0], cells[1], cells[2], attributes))
    return links


def parse_merge_map(text: str, source: str = "<merge map>") -> TypeMergeMap:
    """Parse `old=new` lines into a merge map."""
    mapping: dict[str, str] = {}
    for number, line in _data_lines(text):
        old, sep, new = line.partition("=")
        old, new = old.strip(), new.strip()
        if not sep or not old or not new:
            raise FileFormatError(source, number, f"expected old=new, got {line.strip()!r}")
        if old in mapping and mapping[old] != new:
            raise FileFormatError(source, number, f"type {old!r} mapped twice")
        mapping[old] = new
    return TypeMergeMap(mapping)


def read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise IngestError(f"File not found: {path}", file=str(path)) from None
    except UnicodeDecodeError as e:
        raise IngestError(f"{path} is not valid UTF-8: {e}", file=str(path)) from None


def load_graph(
    ontology_path: Path,
    nodes_path: Path,
    links_path: Optional[Path] = None,
) -> tuple[OntologySchema, SemanticGraph]:
    """Read the three input files and build the graph."""
    schema = parse_ontology(read_text(ontology_path), source=str(ontology_path))
    nodes = parse_nodes(read_text(nodes_path), source=str(nodes_path))
    links = parse_links(read_text(links_path), source=str(links_path)) if links_path else []
    graph = build_graph(nodes, links, schema)
    logger.info("Loaded graph: %d nodes, %d links", graph.n, len(graph.links))
    return schema, graph
