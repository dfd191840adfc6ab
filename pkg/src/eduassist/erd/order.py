"""Emission order for CREATE TABLE statements.

Inline REFERENCES clauses only execute if the referenced table already
exists, so tables are sorted topologically over the reference graph with
Kahn's algorithm; declaration order breaks ties deterministically.
"""

from __future__ import annotations

from .model import ErdModel


class CyclicDependency(ValueError):
    """Reference cycle; carries one cycle's entity names in declaration order."""

    def __init__(self, cycle: list[str]):
        closed = cycle + cycle[:1]
        super().__init__("cyclic reference between entities: " + " -> ".join(closed))
        self.cycle = cycle


def _edges(model: ErdModel) -> list[tuple[str, str]]:
    """(referencing, referenced) pairs, one per ref attribute."""
    return [
        (entity.name, attr.ref[0])
        for entity in model.entities
        for attr in entity.attributes
        if attr.ref is not None
    ]


def _find_cycle(model: ErdModel, stuck: set[str], decl_index: dict[str, int]) -> list[str]:
    adjacency: dict[str, set[str]] = {name: set() for name in stuck}
    for referencing, referenced in _edges(model):
        if referencing in stuck and referenced in stuck:
            adjacency[referencing].add(referenced)
    # Every stuck entity references another stuck entity, so walking the
    # references must revisit a node, closing a cycle. Picks are by
    # declaration order to keep the reported cycle deterministic.
    path: list[str] = []
    seen: dict[str, int] = {}
    node = min(stuck, key=decl_index.get)
    while node not in seen:
        seen[node] = len(path)
        path.append(node)
        node = min(adjacency[node], key=decl_index.get)
    return path[seen[node]:]


def topo_order(model: ErdModel) -> list[str]:
    """Entity names ordered so every referenced entity precedes its referencers.

    Among simultaneously ready entities, declaration order wins. Raises
    :class:`CyclicDependency` when no order exists.
    """
    decl_index = {e.name: i for i, e in enumerate(model.entities)}
    in_degree = {name: 0 for name in decl_index}
    dependents: dict[str, list[str]] = {name: [] for name in decl_index}
    for referencing, referenced in _edges(model):
        in_degree[referencing] += 1
        dependents[referenced].append(referencing)

    ready = sorted(
        (name for name, deg in in_degree.items() if deg == 0),
        key=decl_index.get,
    )
    order: list[str] = []
    while ready:
        name = min(ready, key=decl_index.get)
        ready.remove(name)
        order.append(name)
        for dependent in dependents[name]:
            in_degree[dependent] -= 1
            if in_degree[dependent] == 0:
                ready.append(dependent)

    if len(order) != len(decl_index):
        stuck = {name for name, deg in in_degree.items() if deg > 0}
        raise CyclicDependency(_find_cycle(model, stuck, decl_index))
    return order
