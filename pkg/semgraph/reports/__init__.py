"""Report rendering for CLI output."""

from semgraph.reports.render import ReportFormat, ReportWriter  # noqa: F401
