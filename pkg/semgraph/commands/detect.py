"""detect: the shortest-path subgraph relating two entities."""

from typing import Optional

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.detect import DetectConstraints, detect_with_relevance, shortest_path_subgraph
from semgraph.relevance import RelevanceMode


@command(priority=45)
@click.command("detect")
@click.argument("source")
@click.argument("target")
@click.option("--exclude-type", "excluded_types", multiple=True, help="Node type the search may not pass through; repeatable.")
@click.option("--exclude-link", "excluded_links", multiple=True, help="Link type the search may not use; repeatable.")
@click.option("--max-degree", type=click.IntRange(min=0), default=None, help="Skip interior nodes with a larger degree.")
@click.option(
    "--relevance",
    "relevance_mode",
    type=click.Choice([RelevanceMode.PLAIN.value, RelevanceMode.SEMANTIC.value]),
    default=None,
    help="Skip interior nodes whose relevance is <= tau.",
)
@pass_session
def detect_command(
    session: Session,
    source: str,
    target: str,
    excluded_types: tuple[str, ...],
    excluded_links: tuple[str, ...],
    max_degree: Optional[int],
    relevance_mode: Optional[str],
) -> None:
    """Emit every node and link on a shortest SOURCE-TARGET path."""
    schema, graph = session.load()
    constraints = DetectConstraints(
        excluded_node_types=frozenset(excluded_types),
        excluded_link_types=frozenset(excluded_links),
        max_degree=max_degree,
    )
    if relevance_mode is None:
        result = shortest_path_subgraph(graph, source, target, constraints)
    else:
        result = detect_with_relevance(graph, schema, source, target, session.config.tau, relevance_mode, constraints)
    session.emit_graph(result.subgraph, summary=result.summary())
