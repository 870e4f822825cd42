"""Type merge maps for coarsening."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


class TransformError(Exception):
    """A transformation cannot be applied to the given graph."""
    def __init__(self, message: str, detail: Optional[str] = None):
        self.message = message
        self.detail = detail
        super().__init__(message)


@dataclass(frozen=True)
class TypeMergeMap:
    """Original node type -> coarse node type."""
    mapping: Mapping[str, str]

    def __getitem__(self, node_type: str) -> str:
        return self.mapping[node_type]

    def missing(self, node_types: Iterable[str]) -> list[str]:
        return sorted(t for t in node_types if t not in self.mapping)

    def with_identity(self, node_types: Iterable[str]) -> "TypeMergeMap":
        """Total map over `node_types`: unlisted types map to themselves."""
        mapping = {t: t for t in node_types}
        mapping.update(self.mapping)
        return TypeMergeMap(mapping)
