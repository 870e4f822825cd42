"""Command modules - import all to trigger registration."""

# Import all command modules to register them via decorators
from semgraph.commands import validate, stats, relevance, detect, transform, nullmodel  # noqa: F401

# Re-export registry for convenience
from semgraph.commands.registry import register_all  # noqa: F401
