"""Shared state for one CLI invocation: configuration, inputs and output."""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import click

from semgraph.config import Config, RunConfig
from semgraph.core.graph import SemanticGraph
from semgraph.core.ontology import OntologySchema
from semgraph.i18n import DEFAULT_LANG, t
from semgraph.ingest.export import export_graph
from semgraph.ingest.parser import load_graph
from semgraph.reports.render import ReportFormat, ReportWriter

logger = logging.getLogger(__name__)


@dataclass
class Session:
    """Filled in by the CLI group before any subcommand runs."""

    config: Optional[Config] = None
    run: Optional[RunConfig] = None

    def configure(self, config: Config, run: RunConfig) -> None:
        self.config = config
        self.run = run.resolve()

    @property
    def language(self) -> str:
        if self.run is not None:
            return self.run.language
        return os.getenv("SEMGRAPH_LANG", DEFAULT_LANG)

    def require(self, name: str) -> Path:
        path = getattr(self.run, name)
        if path is None:
            raise click.UsageError(t(self.language, "error_missing_input", name=name))
        return path

    def load(self, links_required: bool = False) -> tuple[OntologySchema, SemanticGraph]:
        """Read --ontology, --nodes and (optionally) --links."""
        ontology = self.require("ontology")
        nodes = self.require("nodes")
        links = self.require("links") if links_required else self.run.links
        return load_graph(ontology, nodes, links)

    def flags(self, **command_flags: Any) -> dict[str, Any]:
        """Full flag set for the provenance header; input files by name only."""
        run = self.run
        flags: dict[str, Any] = {
            "command": run.command,
            "format": run.output_format,
            "lang": run.language,
            "tau": self.config.tau,
            "yr_mode": self.config.yr_mode,
        }
        for name in ("ontology", "nodes", "links"):
            path = getattr(run, name)
            if path is not None:
                flags[name] = path.name
        flags.update(command_flags)
        return {k: v for k, v in flags.items() if v is not None}

    def writer(self, **command_flags: Any) -> ReportWriter:
        return ReportWriter(
            output_format=ReportFormat(self.run.output_format),
            language=self.run.language,
            float_digits=self.config.float_digits,
            flags=self.flags(**command_flags),
        )

    def emit(self, text: str) -> None:
        """Write to --output when given, stdout otherwise."""
        if self.run.output is None:
            click.echo(text, nl=False)
            return
        self.run.output.parent.mkdir(parents=True, exist_ok=True)
        self.run.output.write_text(text, encoding="utf-8")
        logger.info("Wrote %d bytes to %s", len(text.encode("utf-8")), self.run.output)
        click.echo(t(self.language, "written", path=self.run.output), err=True)

    def emit_graph(self, graph: SemanticGraph, summary: Optional[str] = None) -> None:
        """Emit a graph as its canonical document, optionally after a comment line."""
        text = export_graph(graph)
        if summary is not None:
            text = f"# {summary}\n{text}"
        self.emit(text)


pass_session = click.make_pass_decorator(Session, ensure=True)
