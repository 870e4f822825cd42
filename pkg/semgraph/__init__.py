"""Semantic graph statistics, relevance scoring and relationship detection."""

__version__ = "0.1.0"
