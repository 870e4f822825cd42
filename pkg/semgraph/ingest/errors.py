"""Ingest errors."""

from typing import Optional


class IngestError(Exception):
    """An input file could not be read."""
    def __init__(self, message: str, file: Optional[str] = None):
        self.message = message
        self.file = file
        super().__init__(message)


class FileFormatError(IngestError):
    """Malformed content at a given line of an input file."""
    def __init__(self, file: str, line: int, message: str):
        if line < 1:
            raise ValueError(f"line numbers start at 1, got {line}")
        self.line = line
        super().__init__(f"{file}:{line}: {message}", file=file)
        self.detail = message
