"""In-memory typed multigraph with attributes."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional

import networkx as nx

from semgraph.core.errors import (
    DuplicateNodeError,
    GraphError,
    InvariantError,
    SelfLoopError,
    UnknownNodeError,
)
from semgraph.core.ontology import OntologySchema

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodeRecord:
    """A typed node; `node_type` is t(i)."""
    id: str
    node_type: str
    attributes: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class LinkRecord:
    """A typed link, stored with direction, traversed undirected."""
    source: str
    target: str
    link_type: str
    attributes: Mapping[str, str] = field(default_factory=dict)

    @property
    def pair(self) -> tuple[str, str]:
        """Endpoints in canonical (sorted) order."""
        return (self.source, self.target) if self.source <= self.target else (self.target, self.source)


@dataclass(frozen=True)
class Violation:
    """A record that does not conform to the ontology."""
    kind: str  # "link" | "node_type"
    subject: str
    message: str


class SemanticGraph:
    """Immutable typed graph plus its undirected neighbor view.

    Parallel links between one pair collapse to a single neighbor in the
    view; the view edge keeps the set of link types and the record count.
    """

    def __init__(
        self,
        nodes: Mapping[str, NodeRecord],
        links: tuple[LinkRecord, ...],
        schema: OntologySchema,
        view: nx.Graph,
        metadata: Optional[Mapping[str, str]] = None,
    ):
        self._nodes = dict(nodes)
        self._links = links
        self.schema = schema
        self._view = nx.freeze(view)
        self.metadata: dict[str, str] = dict(metadata or {})
        self._neighbors = {i: frozenset(view.adj[i]) for i in view}
        self._type_counts = Counter(node.node_type for node in self._nodes.values())

    # ==========================================
    # Nodes
    # ==========================================

    @property
    def nodes(self) -> Mapping[str, NodeRecord]:
        return self._nodes

    @property
    def n(self) -> int:
        return len(self._nodes)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._nodes

    def __iter__(self) -> Iterator[str]:
        return iter(self._nodes)

    def node(self, node_id: str) -> NodeRecord:
        try:
            return self._nodes[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def node_type(self, node_id: str) -> str:
        return self.node(node_id).node_type

    def nodes_of_type(self, node_type: str) -> list[str]:
        return sorted(i for i, node in self._nodes.items() if node.node_type == node_type)

    @property
    def type_counts(self) -> dict[str, int]:
        """n_α for every node type present in the graph."""
        return dict(self._type_counts)

    def type_count(self, node_type: str) -> int:
        return self._type_counts.get(node_type, 0)

    # ==========================================
    # Adjacency (undirected view)
    # ==========================================

    @property
    def view(self) -> nx.Graph:
        """Frozen undirected simple view; edges carry `link_types` and `multiplicity`."""
        return self._view

    def neighbors(self, node_id: str) -> frozenset[str]:
        self.node(node_id)
        return self._neighbors[node_id]

    def degree(self, node_id: str) -> int:
        return len(self.neighbors(node_id))

    def has_link(self, a: str, b: str) -> bool:
        return self._view.has_edge(a, b)

    def link_types_between(self, a: str, b: str) -> frozenset[str]:
        if not self._view.has_edge(a, b):
            return frozenset()
        return self._view.edges[a, b]["link_types"]

    # ==========================================
    # Links
    # ==========================================

    @property
    def links(self) -> tuple[LinkRecord, ...]:
        return self._links

    def linked_pairs(self) -> int:
        """Number of distinct linked pairs."""
        return self._view.number_of_edges()

    def __repr__(self) -> str:
        return f"SemanticGraph(n={self.n}, links={len(self._links)}, types={len(self._type_counts)})"


def build_graph(
    nodes: Iterable[NodeRecord],
    links: Iterable[LinkRecord],
    schema: OntologySchema,
    metadata: Optional[Mapping[str, str]] = None,
) -> SemanticGraph:
    """Build a graph and its adjacency index. Validation against the schema is separate."""
    node_map: dict[str, NodeRecord] = {}
    view = nx.Graph()
    for node in nodes:
        if node.id in node_map:
            raise DuplicateNodeError(node.id)
        node_map[node.id] = node
        view.add_node(node.id, node_type=node.node_type)

    link_records = tuple(links)
    for link in link_records:
        for endpoint in (link.source, link.target):
            if endpoint not in node_map:
                raise GraphError(
                    f"Link {link.source}-{link.target} ({link.link_type}) references missing node {endpoint}",
                    node_id=endpoint,
                )
        if link.source == link.target:
            raise SelfLoopError(link.source, link.link_type)

        if view.has_edge(link.source, link.target):
            data = view.edges[link.source, link.target]
            data["link_types"] = data["link_types"] | {link.link_type}
            data["multiplicity"] += 1
        else:
            view.add_edge(
                link.source,
                link.target,
                link_types=frozenset({link.link_type}),
                multiplicity=1,
            )

    logger.debug("Built graph with %d nodes and %d link records", len(node_map), len(link_records))
    return SemanticGraph(node_map, link_records, schema, view, metadata)


def validate(graph: SemanticGraph, schema: OntologySchema) -> list[Violation]:
    """Report every record that the ontology does not allow. Empty means conformant."""
    violations: list[Violation] = []

    for node_id in sorted(graph.nodes):
        node_type = graph.node_type(node_id)
        if node_type not in schema.node_types:
            violations.append(Violation(
                kind="node_type",
                subject=node_id,
                message=f"node {node_id} has undeclared type {node_type}",
            ))

    for link in graph.links:
        src_type = graph.node_type(link.source)
        dst_type = graph.node_type(link.target)
        if not schema.allows(src_type, link.link_type, dst_type):
            violations.append(Violation(
                kind="link",
                subject=f"{link.source}-{link.target}",
                message=f"({src_type}, {link.link_type}, {dst_type}) is not allowed",
            ))

    violations.sort(key=lambda v: (v.kind, v.subject, v.message))
    return violations


def neighbors_by_type(graph: SemanticGraph, node_id: str, neighbor_type: str) -> int:
    """k_αβ(i): the number of neighbors of node i that have type β."""
    return sum(1 for j in graph.neighbors(node_id) if graph.node_type(j) == neighbor_type)


def neighbor_type_counts(graph: SemanticGraph, node_id: str) -> Counter:
    """k_αβ(i) for every β at once."""
    return Counter(graph.node_type(j) for j in graph.neighbors(node_id))


def check_invariants(graph: SemanticGraph) -> None:
    """Verify the structural identities of the graph; raise InvariantError otherwise."""
    if sum(graph.type_counts.values()) != graph.n:
        raise InvariantError("n differs from the sum of per-type counts")

    degree_sum = 0
    for i in graph:
        for j in graph.neighbors(i):
            if i not in graph.neighbors(j):
                raise InvariantError(f"Adjacency is not symmetric for {i}-{j}", node_id=i)
        degree_sum += graph.degree(i)
        if sum(neighbor_type_counts(graph, i).values()) != graph.degree(i):
            raise InvariantError(f"Per-type neighbor counts do not sum to the degree of {i}", node_id=i)

    if degree_sum != 2 * graph.linked_pairs():
        raise InvariantError("Degree sum differs from twice the number of linked pairs")
