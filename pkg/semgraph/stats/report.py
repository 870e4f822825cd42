"""Per-type statistics records."""

from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Optional


class YrMode(str, Enum):
    """Population used for the random-wiring disparity baseline."""
    LITERAL = "literal"        # n_β / n over all nodes
    NORMALIZED = "normalized"  # n_β / Σ_{γ∈V(α)} n_γ


@dataclass(frozen=True)
class TypeStats:
    """Aggregates for one node type. None marks an undefined quantity."""

    node_type: str
    count: int
    base_degree: int
    significant: bool = True

    # Connectivity
    mean_degree: Optional[float] = None
    second_moment: Optional[float] = None
    per_type_degree: Optional[float] = None  # m_α
    sigma_k: Optional[float] = None

    # Disparity
    disparity_nodes: int = 0
    mean_disparity: Optional[float] = None
    sigma_y: Optional[float] = None
    random_disparity: Optional[float] = None
    r: Optional[float] = None
    sigma_r: Optional[float] = None


_DISPARITY_FIELDS = (
    "disparity_nodes", "mean_disparity", "sigma_y", "random_disparity", "r", "sigma_r",
)


@dataclass(frozen=True)
class TypeStatsReport:
    rows: tuple[TypeStats, ...]
    yr_mode: Optional[YrMode] = None

    def row(self, node_type: str) -> TypeStats:
        for row in self.rows:
            if row.node_type == node_type:
                return row
        raise KeyError(node_type)

    @property
    def node_types(self) -> list[str]:
        return [row.node_type for row in self.rows]

    def merge(self, disparity: "TypeStatsReport") -> "TypeStatsReport":
        """Connectivity fields from this report, disparity fields from `disparity`."""
        merged = []
        for row in self.rows:
            theirs = disparity.row(row.node_type)
            merged.append(replace(row, **{name: getattr(theirs, name) for name in _DISPARITY_FIELDS}))
        return TypeStatsReport(tuple(merged), disparity.yr_mode)

    def mark_significant(self, min_count: int) -> "TypeStatsReport":
        return TypeStatsReport(
            tuple(replace(row, significant=row.count >= min_count) for row in self.rows),
            self.yr_mode,
        )

    def to_dict(self) -> dict:
        return {
            "yr_mode": self.yr_mode.value if self.yr_mode else None,
            "types": [{f.name: getattr(row, f.name) for f in fields(row)} for row in self.rows],
        }
