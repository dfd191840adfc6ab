"""Semantic checks on a parsed ERD model."""

from __future__ import annotations

from ..diagnostics import Diagnostic, error, warning
from .model import MANY_CARDINALITIES, Entity, ErdModel


def _references(entity: Entity) -> set[str]:
    return {a.ref[0] for a in entity.attributes if a.ref is not None}


def validate_erd(model: ErdModel) -> list[Diagnostic]:
    """Errors for broken references and duplicate names; design-smell warnings.

    Never raises; an empty error set means the model is safe to order and emit.
    """
    diagnostics: list[Diagnostic] = []

    seen: dict[str, Entity] = {}
    for entity in model.entities:
        if entity.name in seen:
            diagnostics.append(
                error(
                    "duplicate_name",
                    f"duplicate entity name {entity.name!r}",
                    entity.line,
                    entity.col,
                )
            )
            continue
        seen[entity.name] = entity

    for entity in model.entities:
        attr_names: set[str] = set()
        for attr in entity.attributes:
            if attr.name in attr_names:
                diagnostics.append(
                    error(
                        "duplicate_name",
                        f"duplicate attribute {attr.name!r} in entity {entity.name!r}",
                        attr.line,
                        attr.col,
                    )
                )
            attr_names.add(attr.name)

            if attr.ref is not None:
                ref_entity, ref_attr = attr.ref
                target = seen.get(ref_entity)
                if target is None:
                    diagnostics.append(
                        error(
                            "unknown_entity",
                            f"unknown entity {ref_entity!r} referenced by "
                            f"{entity.name}.{attr.name}",
                            attr.line,
                            attr.col,
                        )
                    )
                    continue
                target_attr = target.attribute(ref_attr)
                if target_attr is None:
                    diagnostics.append(
                        error(
                            "unknown_attribute",
                            f"entity {ref_entity!r} has no attribute {ref_attr!r} "
                            f"(referenced by {entity.name}.{attr.name})",
                            attr.line,
                            attr.col,
                        )
                    )
                    continue
                if target_attr.sql_type != attr.sql_type:
                    diagnostics.append(
                        error(
                            "type_mismatch",
                            f"type mismatch: {entity.name}.{attr.name} is {attr.sql_type} "
                            f"but {ref_entity}.{ref_attr} is {target_attr.sql_type}",
                            attr.line,
                            attr.col,
                        )
                    )

        if not entity.attributes:
            diagnostics.append(
                error(
                    "no_attributes",
                    f"entity {entity.name!r} declares no attributes",
                    entity.line,
                    entity.col,
                )
            )
        elif not entity.pk_attributes():
            diagnostics.append(
                warning(
                    "no_pk",
                    f"entity {entity.name!r} has no primary key attribute",
                    entity.line,
                    entity.col,
                )
            )

    for rel in model.relationships:
        unknown = [name for name in (rel.left, rel.right) if name not in seen]
        for name in unknown:
            diagnostics.append(
                error(
                    "unknown_entity",
                    f"relationship names unknown entity {name!r}",
                    rel.line,
                    rel.col,
                )
            )
        if unknown:
            continue
        if rel.left_card in MANY_CARDINALITIES and rel.right_card in MANY_CARDINALITIES:
            bridged = any(
                {rel.left, rel.right} <= _references(e) for e in model.entities
            )
            if not bridged:
                diagnostics.append(
                    warning(
                        "many_to_many",
                        f"many-to-many between {rel.left!r} and {rel.right!r} has no "
                        "associative entity referencing both ends",
                        rel.line,
                        rel.col,
                    )
                )

    return diagnostics
