"""Command registry for auto-discovery."""

import click

# Global registry with priority ordering
_commands: list[tuple[int, click.Command]] = []


def command(priority: int = 50):
    """Decorator to register a subcommand.

    Args:
        priority: Lower numbers are listed first in --help. Suggested ranges:
            - 0-19: Input checks (validate)
            - 20-39: Statistics (stats, dist, paths)
            - 40-59: Relevance and detection
            - 60-79: Transforms and generators
    """
    def decorator(c: click.Command) -> click.Command:
        _commands.append((priority, c))
        return c
    return decorator


def register_all(group: click.Group) -> None:
    """Attach every discovered command to the CLI group."""
    for _, c in sorted(_commands, key=lambda x: (x[0], x[1].name)):
        group.add_command(c)
