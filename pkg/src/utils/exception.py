"""
Error handling for gmot.

Two layers live here:
- A small hierarchy of domain errors (`GmotError` and its subclasses) raised by the
  library itself: malformed graph files, invalid parameters, shape mismatches and
  artifact inconsistencies.
- `CustomException`, which wraps any failure at a stage or CLI boundary with the
  file name and line number where it was raised, so pipeline logs point straight
  at the failing code.
"""

from pathlib import Path
from types import ModuleType


class GmotError(Exception):
    """Base class for every error raised by the gmot library."""


class GraphParseError(GmotError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DomainError(GmotError, ValueError):
    """A parameter or input lies outside the domain an operation accepts."""


class ShapeError(DomainError):
    """Array or matrix dimensions do not agree."""


class ArtifactError(GmotError):
    """An artifact (graph file, manifest, matrix, cache) is missing or inconsistent."""

    def __init__(self, message: str, path: Path | str | None = None):
        self.path = path
        if path is not None:
            message = f"{message} [{path}]"
        super().__init__(message)


def error_message_detail(error: Exception | str, error_detail: ModuleType) -> str:
    """
    Extracts the detailed error message including file name and line number.

    Args:
        error (Exception | str): The exception or error message.
        error_detail (ModuleType): The sys module to access execution info.

    Returns:
        str: A formatted error message string.
    """
    _, _, exc_tb = error_detail.exc_info()

    # Walk to the innermost frame: that is where the domain error was raised.
    while exc_tb is not None and exc_tb.tb_next is not None:
        exc_tb = exc_tb.tb_next

    if exc_tb is not None and exc_tb.tb_frame is not None:
        file_name = exc_tb.tb_frame.f_code.co_filename
        line_number = exc_tb.tb_lineno
    else:
        file_name = "unknown"
        line_number = 0

    return (
        f"Error occurred in python script: [{file_name}] "
        f"line number: [{line_number}] "
        f"error message: [{str(error)}]"
    )


class CustomException(Exception):
    """
    Stage-boundary exception carrying traceback location in its message.

    The original error stays reachable through `original` so callers (the CLI)
    can still tell a parse error from an IO failure.
    """

    def __init__(self, error_message: Exception | str, error_detail: ModuleType):
        self.original = error_message if isinstance(error_message, Exception) else None
        self.detailed_message = error_message_detail(
            error=error_message, error_detail=error_detail
        )
        super().__init__(self.detailed_message)

    def __str__(self) -> str:
        return self.detailed_message
