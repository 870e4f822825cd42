"""validate: ontology conformance of the input graph."""

import click

from semgraph.commands.common import Session, pass_session
from semgraph.commands.registry import command
from semgraph.core.graph import check_invariants, validate
from semgraph.reports.sections import add_violations


@command(priority=10)
@click.command("validate")
@pass_session
def validate_command(session: Session) -> None:
    """List links and node types the ontology does not allow."""
    schema, graph = session.load()
    check_invariants(graph)
    writer = session.writer()
    add_violations(writer, validate(graph, schema))
    session.emit(writer.render())
