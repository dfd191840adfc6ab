"""Schema model produced by the ERD parser and consumed by the SQL emitter.

Source positions ride along for diagnostics but are excluded from equality,
so a pretty-printed-and-reparsed model compares structurally equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SIMPLE_TYPES = ("INTEGER", "DECIMAL", "DATE", "BOOLEAN", "TEXT")
CARDINALITIES = ("1", "0..1", "1..*", "0..*")
MANY_CARDINALITIES = ("1..*", "0..*")


@dataclass(frozen=True)
class Attribute:
    name: str
    sql_type: str  # "INTEGER", ..., or "VARCHAR(n)"
    is_pk: bool = False
    not_null: bool = False
    ref: tuple[str, str] | None = None  # (entity name, attribute name)
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Entity:
    name: str
    attributes: tuple[Attribute, ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def pk_attributes(self) -> tuple[Attribute, ...]:
        return tuple(a for a in self.attributes if a.is_pk)

    def attribute(self, name: str) -> Attribute | None:
        for a in self.attributes:
            if a.name == name:
                return a
        return None


@dataclass(frozen=True)
class Relationship:
    left: str
    left_card: str
    right: str
    right_card: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ErdModel:
    entities: tuple[Entity, ...] = ()
    relationships: tuple[Relationship, ...] = ()

    def entity(self, name: str) -> Entity | None:
        for e in self.entities:
            if e.name == name:
                return e
        return None


@dataclass(frozen=True)
class SqlScript:
    statements: tuple[str, ...]  # CREATE TABLE texts, each ending with ";"

    def to_text(self) -> str:
        return "\n\n".join(self.statements) + "\n"
