"""coarsen and project: change the scale of the input graph."""

from pathlib import Path

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.ingest.parser import parse_merge_map, read_text
from semgraph.transform import coarsen, one_mode_projection


@command(priority=60)
@click.command("coarsen")
@click.option(
    "--map",
    "map_path",
    type=click.Path(path_type=Path),
    required=True,
    help="Merge map file with one old=new line per type; unlisted types keep their name.",
)
@pass_session
def coarsen_command(session: Session, map_path: Path) -> None:
    """Relabel node types through a merge map."""
    schema, graph = session.load()
    merge_map = parse_merge_map(read_text(map_path), source=str(map_path))
    merge_map = merge_map.with_identity(schema.node_types | set(graph.type_counts))
    coarse, _ = coarsen(graph, schema, merge_map)
    session.emit_graph(coarse)


@command(priority=62)
@click.command("project")
@click.option("--keep", "keep_type", required=True, help="Node type kept in the projection.")
@click.option("--via", "via_type", required=True, help="Node type the kept nodes share.")
@pass_session
def project_command(session: Session, keep_type: str, via_type: str) -> None:
    """One-mode projection of a bipartite graph."""
    _, graph = session.load()
    session.emit_graph(one_mode_projection(graph, keep_type, via_type))
