from __future__ import annotations


class KneserLabError(Exception):
    """Base class for errors raised by kneser_lab."""


class ParseError(KneserLabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(KneserLabError):
    """A configured cap (edge count, instance size, enumeration size) was exceeded."""
