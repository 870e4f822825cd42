"""nullmodel: seeded random graphs and their clustering baselines."""

from typing import Optional

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.nullmodel import (
    BipartiteMode,
    BipartiteParams,
    compare_projection_clustering,
    compare_random_clustering,
    er_random,
    random_bipartite,
)
from semgraph.nullmodel.generators import ACTOR, MOVIE
from semgraph.reports.sections import add_projection_comparison, add_random_comparison, add_type_stats
from semgraph.stats import type_stats_report
from semgraph.transform import one_mode_projection


@command(priority=70)
@click.command("nullmodel")
@click.option("--kind", type=click.Choice(["bipartite", "er"]), default="bipartite", show_default=True)
@click.option("--seed", type=int, required=True, help="Random seed; identical seeds give identical output.")
@click.option("--na", "n_a", type=int, default=None, help="Actors (bipartite).")
@click.option("--nm", "n_m", type=int, default=None, help="Movies (bipartite).")
@click.option("--mu", type=float, default=None, help="Mean movies per actor (bipartite).")
@click.option(
    "--mode",
    type=click.Choice([m.value for m in BipartiteMode]),
    default=BipartiteMode.INDEPENDENT.value,
    show_default=True,
)
@click.option("--project", is_flag=True, help="Project the bipartite graph onto actors.")
@click.option("--stats", is_flag=True, help="Report statistics instead of emitting the graph.")
@click.option("--n", type=int, default=None, help="Nodes (er).")
@click.option("--p", type=float, default=None, help="Link probability (er).")
@pass_session
def nullmodel_command(
    session: Session,
    kind: str,
    seed: int,
    n_a: Optional[int],
    n_m: Optional[int],
    mu: Optional[float],
    mode: str,
    project: bool,
    stats: bool,
    n: Optional[int],
    p: Optional[float],
) -> None:
    """Generate a null-model graph.

    With --stats the bipartite model reports the measured clustering of its
    actor projection next to 1/(mu+1) when --project is given, and its type
    statistics otherwise; the er model reports clustering next to k/n.
    """
    if kind == "er":
        if n is None or p is None:
            raise click.UsageError("--kind er requires --n and --p")
        if stats:
            writer = session.writer(kind=kind, n=n, p=p, seed=seed)
            add_random_comparison(writer, compare_random_clustering(n, p, seed))
            session.emit(writer.render())
        else:
            session.emit_graph(er_random(n, p, seed))
        return

    if n_a is None or n_m is None or mu is None:
        raise click.UsageError("--kind bipartite requires --na, --nm and --mu")
    params = BipartiteParams(n_a=n_a, n_m=n_m, mu=mu, seed=seed)
    params.check()

    if stats:
        writer = session.writer(kind=kind, na=n_a, nm=n_m, mu=mu, seed=seed, mode=mode, project=project)
        if project:
            add_projection_comparison(writer, compare_projection_clustering(params, mode))
        else:
            graph = random_bipartite(params, mode)
            config = session.config
            add_type_stats(writer, type_stats_report(graph, graph.schema, config.yr_mode, config.significant_type_count))
        session.emit(writer.render())
        return

    graph = random_bipartite(params, mode)
    if project:
        graph = one_mode_projection(graph, ACTOR, MOVIE)
    session.emit_graph(graph)
