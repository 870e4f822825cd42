"""stats, dist and paths: descriptive statistics of the input graph."""

from typing import Optional

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.i18n import t
from semgraph.reports.sections import (
    add_clustering_rank,
    add_clustering_summary,
    add_degree_distribution,
    add_ontology_summary,
    add_path_matrix,
    add_removal_impact,
    add_type_stats,
)
from semgraph.stats import (
    degree_distribution,
    graph_clustering,
    ontology_diameter,
    ontology_hub_types,
    path_length_matrix,
    rank_by_clustering,
    transitivity,
    type_removal_impact,
    type_stats_report,
)


@command(priority=20)
@click.command("stats")
@click.option("--top", type=click.IntRange(min=0), default=None, help="Rows in the clustering rankings (default from config).")
@click.option("--full", is_flag=True, help="Every column of the type statistics, not just the summary layout.")
@pass_session
def stats_command(session: Session, top: Optional[int], full: bool) -> None:
    """Per-type connectivity and disparity report."""
    config = session.config
    top = config.top if top is None else top
    schema, graph = session.load()

    writer = session.writer(top=top, full=full)
    add_type_stats(writer, type_stats_report(graph, schema, config.yr_mode, config.significant_type_count), full)
    if graph.n:
        add_clustering_summary(writer, graph_clustering(graph), transitivity(graph))
    if top:
        lang = session.language
        add_clustering_rank(writer, "rank_plain", t(lang, "section_rank_plain"), rank_by_clustering(graph, top=top))
        add_clustering_rank(
            writer, "rank_semantic", t(lang, "section_rank_semantic"), rank_by_clustering(graph, schema, top=top)
        )
    session.emit(writer.render())


@command(priority=22)
@click.command("dist")
@click.option("--type", "node_types", multiple=True, help="Node type to report; repeatable (default: every type).")
@pass_session
def dist_command(session: Session, node_types: tuple[str, ...]) -> None:
    """Degree histogram per node type."""
    _, graph = session.load()
    selected = sorted(node_types) if node_types else sorted(graph.schema.node_types)

    writer = session.writer(types=",".join(selected))
    for node_type in selected:
        add_degree_distribution(writer, degree_distribution(graph, node_type))
    session.emit(writer.render())


@command(priority=24)
@click.command("paths")
@click.option("--removal/--no-removal", default=True, help="Also measure the effect of removing each type.")
@pass_session
def paths_command(session: Session, removal: bool) -> None:
    """Mean shortest-path length between every pair of node types."""
    schema, graph = session.load()
    threshold = session.config.hub_shortening_threshold

    writer = session.writer(removal=removal, hub_threshold=threshold)
    add_ontology_summary(writer, ontology_diameter(schema), ontology_hub_types(schema))
    add_path_matrix(writer, path_length_matrix(graph))
    if removal:
        add_removal_impact(writer, type_removal_impact(graph, threshold))
    session.emit(writer.render())
