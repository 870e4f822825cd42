"""Main entry point for the semgraph command line."""

import dataclasses
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import click
import yaml

from semgraph import __version__
from semgraph.commands import register_all
from semgraph.commands.common import Session
from semgraph.config import RunConfig, load_config
from semgraph.core.errors import GraphError, InvariantError, OntologyError
from semgraph.i18n import REPORT_LANGUAGES, t
from semgraph.ingest.errors import IngestError
from semgraph.nullmodel.generators import NullModelError
from semgraph.transform.merge import TransformError

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

DATA_ERRORS = (
    IngestError,
    GraphError,
    OntologyError,
    TransformError,
    NullModelError,
    FileNotFoundError,
    yaml.YAMLError,
)


# Set up logging (stderr, so reports on stdout stay byte-identical)
logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=logging.INFO,
)
logger = logging.getLogger(__name__)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="semgraph")
@click.option("--ontology", type=click.Path(path_type=Path), help="Ontology file (nodetype/linktype/allow lines).")
@click.option("--nodes", type=click.Path(path_type=Path), help="Node CSV: id,type[,attributes].")
@click.option("--links", type=click.Path(path_type=Path), help="Link CSV: source,target,type[,attributes].")
@click.option("--output", type=click.Path(path_type=Path), help="Write the result here instead of stdout.")
@click.option("--format", "output_format", type=click.Choice(["table", "structured"]), default=None)
@click.option("--tau", type=click.FloatRange(0, 1), default=None, help="Relevance threshold (default 0.1).")
@click.option("--yr-mode", type=click.Choice(["literal", "normalized"]), default=None)
@click.option("--lang", type=click.Choice(sorted(REPORT_LANGUAGES)), default=None, help="Report language.")
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None, help="Alternative config.yaml.")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def cli(
    ctx: click.Context,
    ontology: Optional[Path],
    nodes: Optional[Path],
    links: Optional[Path],
    output: Optional[Path],
    output_format: Optional[str],
    tau: Optional[float],
    yr_mode: Optional[str],
    lang: Optional[str],
    config_path: Optional[Path],
    verbose: bool,
) -> None:
    """Semantic graph statistics, relevance and relationship detection."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.INFO)

    config = load_config(config_path)
    overrides = {"tau": tau, "yr_mode": yr_mode, "report_format": output_format, "report_language": lang}
    config = dataclasses.replace(config, **{k: v for k, v in overrides.items() if v is not None})

    run = RunConfig(
        command=ctx.invoked_subcommand,
        ontology=ontology,
        nodes=nodes,
        links=links,
        output=output,
        output_format=config.report_format,
        language=config.report_language,
    )
    ctx.ensure_object(Session).configure(config, run)
    logger.debug("Running %s with %s", run.command, config)


register_all(cli)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and map its outcome to an exit code."""
    session = Session()
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="semgraph",
                          standalone_mode=False, obj=session)
    except InvariantError as e:
        click.echo(t(session.language, "error_internal", message=e.message), err=True)
        return EXIT_INTERNAL
    except DATA_ERRORS as e:
        click.echo(t(session.language, "error_data", message=getattr(e, "message", str(e))), err=True)
        return EXIT_DATA
    except click.ClickException as e:
        click.echo(t(session.language, "error_usage", message=e.format_message()), err=True)
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except ValueError as e:
        click.echo(t(session.language, "error_usage", message=str(e)), err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
