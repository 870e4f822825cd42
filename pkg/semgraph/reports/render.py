"""Deterministic report rendering: aligned tables (pandas) or structured text (YAML)."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Optional, Sequence

import pandas as pd
import yaml

from semgraph import __version__
from semgraph.i18n import t


class ReportFormat(str, Enum):
    TABLE = "table"
    STRUCTURED = "structured"


@dataclass
class _Section:
    key: str
    title: str
    columns: Sequence[tuple[str, str]]  # (record key, label key)
    records: list[Mapping[str, Any]]


@dataclass
class ReportWriter:
    """Collects report sections and renders them with a provenance header."""

    output_format: ReportFormat = ReportFormat.TABLE
    language: str = "en"
    float_digits: int = 6
    flags: Mapping[str, Any] = field(default_factory=dict)
    _sections: list[_Section] = field(default_factory=list)
    _notes: list[tuple[str, str, Optional[Mapping[str, Any]]]] = field(default_factory=list)

    def section(
        self,
        key: str,
        title: str,
        columns: Sequence[tuple[str, str]],
        records: Sequence[Mapping[str, Any]],
    ) -> None:
        self._sections.append(_Section(key, title, columns, list(records)))

    def note(self, key: str, text: str, data: Optional[Mapping[str, Any]] = None) -> None:
        """A one-line section; `data` is what the structured format records."""
        self._notes.append((key, text, data))

    def format_value(self, value: Any) -> str:
        if value is None:
            return t(self.language, "undefined")
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return f"{value:.{self.float_digits}f}"
        return str(value)

    def _flag_line(self) -> str:
        return " ".join(f"{k}={self.flags[k]}" for k in sorted(self.flags))

    def _render_table(self, section: _Section) -> str:
        headers = [t(self.language, label) for _, label in section.columns]
        if not section.records:
            return "  ".join(headers)
        rows = [[self.format_value(r.get(key)) for key, _ in section.columns] for r in section.records]
        frame = pd.DataFrame(rows, columns=headers)
        return frame.to_string(index=False)

    def render(self) -> str:
        if self.output_format is ReportFormat.STRUCTURED:
            document: dict[str, Any] = {
                "provenance": {
                    "version": __version__,
                    "flags": {k: self.flags[k] for k in sorted(self.flags)},
                },
            }
            for key, text, data in self._notes:
                document[key] = dict(data) if data is not None else text
            for section in self._sections:
                document[section.key] = [dict(r) for r in section.records]
            return yaml.safe_dump(document, sort_keys=False, allow_unicode=True)

        lines = [
            "# " + t(self.language, "header_version", version=__version__),
            "# " + t(self.language, "header_flags", flags=self._flag_line()),
        ]
        for _, text, _ in self._notes:
            lines.append("")
            lines.append(text)
        for section in self._sections:
            lines.append("")
            lines.append(f"## {section.title}")
            lines.append(self._render_table(section))
        return "\n".join(lines) + "\n"
