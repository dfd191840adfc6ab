"""CREATE TABLE generation from a validated ERD model."""

from __future__ import annotations

from .model import Entity, ErdModel, SqlScript
from .order import topo_order


def _column_line(attr, single_pk: bool) -> str:
    parts = [f"  {attr.name} {attr.sql_type}"]
    if attr.is_pk and single_pk:
        parts.append(" PRIMARY KEY")
    if attr.not_null and not attr.is_pk:
        parts.append(" NOT NULL")
    if attr.ref is not None:
        parts.append(f" REFERENCES {attr.ref[0]}({attr.ref[1]})")
    return "".join(parts)


def create_table(entity: Entity) -> str:
    """One statement; composite keys get a table-level PRIMARY KEY line."""
    pk_attrs = entity.pk_attributes()
    single_pk = len(pk_attrs) == 1
    lines = [_column_line(a, single_pk) for a in entity.attributes]
    if len(pk_attrs) >= 2:
        lines.append("  PRIMARY KEY (" + ", ".join(a.name for a in pk_attrs) + ")")
    body = ",\n".join(lines)
    return f"CREATE TABLE {entity.name} (\n{body}\n);"


def generate_sql(model: ErdModel) -> SqlScript:
    """Statements in topological order; requires a validated, acyclic model."""
    by_name = {e.name: e for e in model.entities}
    return SqlScript(tuple(create_table(by_name[name]) for name in topo_order(model)))
