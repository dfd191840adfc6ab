"""Pretty-printer back to the ERD notation; parsing its output round-trips."""

from __future__ import annotations

from .model import Attribute, Entity, ErdModel, Relationship


def format_attribute(attr: Attribute) -> str:
    parts = [f"{attr.name}: {attr.sql_type}"]
    if attr.is_pk:
        parts.append("pk")
    if attr.not_null:
        parts.append("notnull")
    if attr.ref is not None:
        parts.append(f"ref({attr.ref[0]}.{attr.ref[1]})")
    return " ".join(parts)


def format_entity(entity: Entity) -> str:
    lines = [f"entity {entity.name} {{"]
    lines.extend(f"  {format_attribute(a)}" for a in entity.attributes)
    lines.append("}")
    return "\n".join(lines)


def format_relationship(rel: Relationship) -> str:
    return f"rel {rel.left} {rel.left_card} -- {rel.right_card} {rel.right}"


def format_erd(model: ErdModel) -> str:
    blocks = [format_entity(e) for e in model.entities]
    blocks.extend(format_relationship(r) for r in model.relationships)
    return "\n\n".join(blocks) + ("\n" if blocks else "")
