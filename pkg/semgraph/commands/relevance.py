"""relevance and prune: which nodes and links help relationship detection."""

from typing import Optional

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.i18n import t
from semgraph.relevance import (
    RelevanceMode,
    latent_links,
    link_type_frequencies,
    link_type_relevance,
    prune_irrelevant,
    prune_node,
    rank_links,
    rank_node_relevance,
    relevance_outliers,
    useful_nodes,
)
from semgraph.reports.sections import (
    add_latent_links,
    add_link_ranking,
    add_link_type_frequencies,
    add_link_type_relevance,
    add_node_relevance,
    add_outliers,
)

MODES = [m.value for m in RelevanceMode]


@command(priority=40)
@click.command("relevance")
@click.option("--mode", type=click.Choice(MODES), default=RelevanceMode.PLAIN.value, show_default=True)
@click.option("--z", type=click.FloatRange(min=0, min_open=True), default=None, help="Outlier threshold in standard deviations.")
@click.option("--latent", type=click.FloatRange(0, 1, min_open=True), default=None, help="Also list unlinked pairs with S at least this value.")
@click.option("--top", type=click.IntRange(min=0), default=None, help="Rows in the link rankings (default from config).")
@pass_session
def relevance_command(
    session: Session,
    mode: str,
    z: Optional[float],
    latent: Optional[float],
    top: Optional[int],
) -> None:
    """Node relevance, link rankings, per-link-type relevance and outlier links."""
    config = session.config
    z = config.outlier_z if z is None else z
    top = config.top if top is None else top
    lang = session.language
    schema, graph = session.load()

    useful = None
    if mode == RelevanceMode.WEAK_2HOP.value:
        useful = useful_nodes(graph, schema, config.tau, RelevanceMode.PLAIN)

    writer = session.writer(mode=mode, z=z, latent=latent, top=top, outlier_min_links=config.outlier_min_links)
    add_node_relevance(writer, rank_node_relevance(graph, schema, config.tau, mode, useful))
    if top:
        if mode == RelevanceMode.SEMANTIC.value:
            by_score = rank_links(graph, "score", top, schema)
            add_link_ranking(writer, "links_semantic", t(lang, "section_links_semantic"), by_score)
        else:
            add_link_ranking(writer, "links_by_score", t(lang, "section_links_by_score"), rank_links(graph, "score", top))
        add_link_ranking(writer, "links_by_common", t(lang, "section_links_by_common"), rank_links(graph, "common", top))
    add_link_type_relevance(writer, link_type_relevance(graph))
    add_link_type_frequencies(writer, link_type_frequencies(graph))
    add_outliers(writer, relevance_outliers(graph, z, config.outlier_min_links), z)
    if latent is not None:
        add_latent_links(writer, latent_links(graph, latent, schema), latent)
    session.emit(writer.render())


@command(priority=42)
@click.command("prune")
@click.option("--node", "node_id", default=None, help="Node to turn into an attribute of its neighbors.")
@click.option("--attribute", default=None, help="Attribute name for --node (default: the node's type).")
@click.option("--auto", is_flag=True, help="Prune every node of degree >= 2 whose relevance is <= tau.")
@click.option(
    "--mode",
    type=click.Choice([RelevanceMode.PLAIN.value, RelevanceMode.SEMANTIC.value]),
    default=RelevanceMode.PLAIN.value,
    show_default=True,
    help="Relevance measure for --auto.",
)
@pass_session
def prune_command(
    session: Session,
    node_id: Optional[str],
    attribute: Optional[str],
    auto: bool,
    mode: str,
) -> None:
    """Emit the graph with pruned nodes folded into neighbor attributes."""
    if auto == (node_id is not None):
        raise click.UsageError("give exactly one of --node or --auto")
    config = session.config
    schema, graph = session.load()

    if auto:
        pruned = prune_irrelevant(graph, schema, config.tau, mode, config.prune_separator)
    else:
        name = attribute or graph.node_type(node_id)
        pruned = prune_node(graph, node_id, name, config.prune_separator)
    session.emit_graph(pruned)
