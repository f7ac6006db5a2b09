"""Inheritance flattening, cycle detection and behavior association."""

from __future__ import annotations

from ross.infopedia.model import ClassView, Designator, Infopedia


def ancestor_order(graph: dict[str, tuple[str, ...]], name: str) -> list[str]:
    """Depth-first preorder over higher classes, declaration order, no repeats."""
    order: list[str] = []
    seen = {name}
    stack = [iter(graph.get(name, ()))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            continue
        if nxt in seen:
            continue
        seen.add(nxt)
        order.append(nxt)
        stack.append(iter(graph.get(nxt, ())))
    return order


def find_cycles(graph: dict[str, tuple[str, ...]]) -> list[list[str]]:
    """Every elementary cycle reachable by DFS, each reported once as a name path."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {n: WHITE for n in graph}
    cycles: list[list[str]] = []
    seen_sets: set[frozenset] = set()
    for root in graph:
        if color[root] != WHITE:
            continue
        path = [root]
        color[root] = GREY
        stack = [iter(graph[root])]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                color[path.pop()] = BLACK
                continue
            if nxt not in graph:
                continue
            if color[nxt] == GREY:
                cyc = path[path.index(nxt):] + [nxt]
                key = frozenset(cyc)
                if key not in seen_sets:
                    seen_sets.add(key)
                    cycles.append(cyc)
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                stack.append(iter(graph[nxt]))
    return cycles


def flatten_inheritance(info: Infopedia, name: str) -> ClassView:
    """Merge a class with its transitive higher classes; nearer definitions win."""
    graph = {n: c.higher_classes for n, c in info.object_frame_classes.items()}
    own = info.ofc(name)
    ancestors = ancestor_order(graph, name)
    chain = [own] + [info.object_frame_classes[a] for a in ancestors if a in info.object_frame_classes]
    types: dict = {}
    attrs: dict = {}
    systems: dict = {}
    bases: list[str] = []
    structure: list[str] = []
    behaviors: dict[str, Designator] = {}
    for c in chain:
        for k, t in c.attribute_types.items():
            types.setdefault(k, t)
        for a in c.attributes:
            attrs.setdefault(a.type.name, a)
        for k, d in c.dimension_systems.items():
            systems.setdefault(k, d)
        for b in c.sp_bases:
            if b not in bases:
                bases.append(b)
        for s in c.structure:
            if s not in structure:
                structure.append(s)
        for d in c.associated:
            behaviors.setdefault(d.behavior, d)
    return ClassView(
        name=name,
        ancestors=tuple(ancestors),
        attribute_types=types,
        attributes=tuple(attrs.values()),
        dimension_systems=systems,
        sp_bases=tuple(bases),
        structure=tuple(structure),
        behaviors=tuple(behaviors.values()),
    )


def shadowed_types(info: Infopedia, name: str) -> list[tuple[str, str, str]]:
    """(type name, winning class, hidden class) for every shadowed attribute type."""
    graph = {n: c.higher_classes for n, c in info.object_frame_classes.items()}
    owner: dict[str, str] = {}
    out = []
    for cname in [name] + ancestor_order(graph, name):
        c = info.object_frame_classes.get(cname)
        if c is None:
            continue
        for k in c.attribute_types:
            if k in owner:
                out.append((k, owner[k], cname))
            else:
                owner[k] = cname
    return out


def associate_behaviors(info: Infopedia) -> None:
    """Link every behavior class to the object frame classes its populated objects use.

    Explicit BehaviorsPotential/BehaviorsActual designators keep their
    probability; automatic associations carry none. Idempotent.
    """
    for c in info.object_frame_classes.values():
        listed: dict[str, Designator] = {}
        for d in c.behaviors_potential + c.behaviors_actual:
            listed.setdefault(d.behavior, d)
        c.associated = list(listed.values())
    for b in info.behaviors:
        for node in b.populated():
            c = info.object_frame_classes.get(node.cls)
            if c is None:
                continue
            if all(d.behavior != b.name for d in c.associated):
                c.associated.append(Designator(b.name, None, "auto"))
    info._views.clear()
