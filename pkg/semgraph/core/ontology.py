"""Ontology schema: node types, link types and the triples that may exist."""

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from semgraph.core.errors import OntologyError

Triple = tuple[str, str, str]


@dataclass(frozen=True)
class OntologySchema:
    """Auxiliary graph over node types declaring which typed links may exist.

    `declared` keeps triples in the orientation they were written; `allowed`
    is its symmetric closure, which is what every undirected measure reads.
    """

    node_types: frozenset[str]
    link_types: frozenset[str]
    declared: frozenset[Triple]
    allowed: frozenset[Triple] = field(init=False, repr=False)
    _neighbor_types: Mapping[str, frozenset[str]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for src, link, dst in self.declared:
            for type_name in (src, dst):
                if type_name not in self.node_types:
                    raise OntologyError(
                        f"Triple ({src}, {link}, {dst}) references undeclared node type {type_name}",
                        type_name=type_name,
                    )
            if link not in self.link_types:
                raise OntologyError(
                    f"Triple ({src}, {link}, {dst}) references undeclared link type {link}",
                    type_name=link,
                )

        allowed = set(self.declared)
        allowed.update((dst, link, src) for src, link, dst in self.declared)
        object.__setattr__(self, "allowed", frozenset(allowed))

        neighbor_types: dict[str, set[str]] = {t: set() for t in self.node_types}
        for src, _, dst in allowed:
            neighbor_types[src].add(dst)
        object.__setattr__(
            self, "_neighbor_types", {t: frozenset(v) for t, v in neighbor_types.items()}
        )

    @classmethod
    def build(
        cls,
        node_types: Iterable[str],
        link_types: Iterable[str],
        triples: Iterable[Triple],
    ) -> "OntologySchema":
        """Create a schema; link types used by triples are declared implicitly."""
        triples = frozenset(tuple(t) for t in triples)
        links = set(link_types) | {link for _, link, _ in triples}
        return cls(frozenset(node_types), frozenset(links), triples)

    @classmethod
    def complete(cls, node_types: Iterable[str], link_type: str = "related") -> "OntologySchema":
        """Schema in which every pair of node types (self-pairs included) may be linked."""
        types = sorted(set(node_types))
        triples = {
            (a, link_type, b) for a, b in itertools.combinations_with_replacement(types, 2)
        }
        return cls.build(types, [link_type], triples)

    def require_type(self, node_type: str) -> None:
        if node_type not in self.node_types:
            raise OntologyError(f"Unknown node type: {node_type}", type_name=node_type)

    def allows(self, src_type: str, link_type: str, dst_type: str) -> bool:
        """Whether a link of this type may join the two node types (either orientation)."""
        return (src_type, link_type, dst_type) in self.allowed

    def types_can_link(self, a: str, b: str) -> bool:
        """Whether any link type may join the two node types."""
        return b in self._neighbor_types.get(a, frozenset())

    def neighbor_types(self, node_type: str) -> frozenset[str]:
        self.require_type(node_type)
        return self._neighbor_types[node_type]

    def base_degree(self, node_type: str) -> int:
        """k⁰_α: number of node types α may neighbor."""
        return len(self.neighbor_types(node_type))

    def relabel(self, mapping: Mapping[str, str]) -> "OntologySchema":
        """Schema with node types renamed through `mapping`; duplicate triples collapse."""
        triples = {(mapping[src], link, mapping[dst]) for src, link, dst in self.declared}
        return OntologySchema(
            frozenset(mapping[t] for t in self.node_types),
            self.link_types,
            frozenset(triples),
        )


def allowed_neighbor_types(schema: OntologySchema, node_type: str) -> frozenset[str]:
    """V(α): the node types the ontology allows `node_type` to link to."""
    return schema.neighbor_types(node_type)
