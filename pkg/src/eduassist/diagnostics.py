"""Diagnostics shared by the dataset parser, the ERD compiler, and the service."""

from __future__ import annotations

from dataclasses import asdict, dataclass

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """One problem found in user input, never raised as an exception.

    ``line``/``col`` are 1-based when known, 0 when the problem has no
    source position (e.g. a whole-model validation failure).
    """

    severity: str
    kind: str
    message: str
    line: int = 0
    col: int = 0

    def is_error(self) -> bool:
        return self.severity == ERROR

    def to_dict(self) -> dict:
        return asdict(self)

    def __str__(self) -> str:
        pos = f"{self.line}:{self.col}: " if self.line else ""
        return f"{pos}{self.severity}: {self.message}"


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.is_error() for d in diagnostics)


def error(kind: str, message: str, line: int = 0, col: int = 0) -> Diagnostic:
    return Diagnostic(ERROR, kind, message, line, col)


def warning(kind: str, message: str, line: int = 0, col: int = 0) -> Diagnostic:
    return Diagnostic(WARNING, kind, message, line, col)
