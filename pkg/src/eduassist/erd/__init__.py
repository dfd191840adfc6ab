"""ERD text to SQL DDL: parse, validate, order, emit."""

from __future__ import annotations

from ..diagnostics import Diagnostic, error, has_errors
from .emit import create_table, generate_sql
from .model import Attribute, Entity, ErdModel, Relationship, SqlScript
from .order import CyclicDependency, topo_order
from .parser import parse_erd
from .printer import format_erd
from .validate import validate_erd


class CompileError(ValueError):
    """Pipeline failure; ``diagnostics`` holds everything collected so far."""

    def __init__(self, diagnostics: list[Diagnostic]):
        first = next((d for d in diagnostics if d.is_error()), None)
        super().__init__(str(first) if first else "compilation failed")
        self.diagnostics = diagnostics


def compile_erd(source: str) -> SqlScript:
    """parse -> validate -> order -> emit; the first failing stage aborts.

    Raises :class:`CompileError` carrying the stage's diagnostics (plus any
    earlier warnings); cycles surface as a ``cyclic_dependency`` diagnostic.
    """
    model, diagnostics = parse_erd(source)
    if has_errors(diagnostics):
        raise CompileError(diagnostics)
    diagnostics = diagnostics + validate_erd(model)
    if has_errors(diagnostics):
        raise CompileError(diagnostics)
    try:
        return generate_sql(model)
    except CyclicDependency as exc:
        raise CompileError(diagnostics + [error("cyclic_dependency", str(exc))]) from exc


__all__ = [
    "Attribute",
    "CompileError",
    "CyclicDependency",
    "Entity",
    "ErdModel",
    "Relationship",
    "SqlScript",
    "compile_erd",
    "create_table",
    "format_erd",
    "generate_sql",
    "parse_erd",
    "topo_order",
    "validate_erd",
]
