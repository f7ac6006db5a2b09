"""Context creation, attachment, population, cloning and value queries."""

from __future__ import annotations

from ross.errors import (
    AttributeConflict,
    DuplicateIdentifier,
    LookupFailure,
    MembershipError,
    NoTemporalDimension,
    TimelineError,
    UnknownInstance,
)
from ross.facts.model import Context, GlobalAssumptions, InstanceAttribute, ObjectInstance
from ross.infopedia import Infopedia
from ross.syntax.ast import NIL
from ross.values import check_membership

DEFAULT_MOOD = "Declarative-PastSimple"


def create_context(info: Infopedia, identifier: str, sp_class: str, initial=None,
                   mood: str = DEFAULT_MOOD, leading_class: str | None = None) -> Context:
    """A context holding one empty structural parent instance at ``initial``.

    ``initial`` defaults to the first member of the class's temporal value set.
    """
    c = info.ofc(sp_class)
    if not c.structural_parent:
        raise NoTemporalDimension(f"{sp_class} is not a structural parent class")
    try:
        ds, temporal = info.temporal_system(sp_class)
    except LookupFailure as e:
        raise NoTemporalDimension(str(e)) from None
    vs = temporal.value_set
    if initial is None:
        initial = vs.first()
    if initial is NIL or not vs.contains(initial):
        raise TimelineError(f"{initial!r} is not a member of timeline {vs.name}")
    ctx = Context(identifier, mood, sp_class, ds.qualified, vs, leading_class, last_time=initial)
    ctx.points[initial] = ObjectInstance(sp_class, f"{sp_class}-1")
    return ctx


def _location_sets(info: Infopedia, cls: str):
    """At-location and extent sets of the nearest class (self first) that declares any."""
    for name in (cls, *info.ancestors(cls)):
        c = info.ofc(name)
        if c.at_locations or c.extents:
            return c.at_locations + c.extents
    return ()


def attach(info: Infopedia, parent: ObjectInstance, cls: str, identifier: str,
           relationship: dict | None = None, *, root: ObjectInstance | None = None,
           content=(), multiple: bool = False) -> ObjectInstance:
    """Create an instance of ``cls`` and append it to ``parent``'s structure.

    Uniqueness of ``identifier`` is checked over ``root`` (default ``parent``).
    """
    view = info.view(cls)
    scope = root if root is not None else parent
    if scope.identifier == identifier or scope.find(identifier) is not None:
        raise DuplicateIdentifier(f"identifier {identifier} is already attached")
    placeholders: dict[str, object] = {}
    types = {}
    for ls in _location_sets(info, cls):
        given = {s.type.qualified: s.value for s in ls.settings if s.kind == "val"}
        for t in ls.dimension_system.types:
            placeholders[t.qualified] = given.get(t.qualified, NIL)
            types[t.qualified] = t
            types.setdefault(t.name, t)
    for key, value in (relationship or {}).items():
        t = types.get(key)
        if t is None:
            raise LookupFailure(f"{cls} has no relationship-to-parent attribute {key}")
        check_membership(value, t.value_set)
        placeholders[t.qualified] = value
    inst = ObjectInstance(cls, identifier, tuple(content), bool(multiple), relationship=placeholders,
                          behaviors=tuple(d.behavior for d in view.behaviors))
    for s in view.attributes:
        if s.kind == "val":
            inst.attributes[s.type.qualified] = InstanceAttribute(s.type.qualified, s.value, False, s.probability)
    parent.structure.append(inst)
    return inst


def resolve_type(info: Infopedia, inst: ObjectInstance, type_name: str):
    return info.attribute_type_for(inst.cls, type_name)


def conflicts(existing: InstanceAttribute | None, value, negated: bool) -> bool:
    """Two settings of one type conflict iff both non-nil and unequal, or negation differs."""
    if existing is None:
        return False
    if existing.value is NIL or value is NIL:
        return False
    return existing.value != value or existing.negated != negated


def set_state_attribute(info: Infopedia, inst: ObjectInstance, type_name: str, value,
                        negated: bool = False, probability: float | None = None,
                        replace: bool = False) -> InstanceAttribute:
    t = resolve_type(info, inst, type_name)
    if value is not NIL and not t.value_set.contains(value):
        raise MembershipError(f"{value!r} is not a member of {t.qualified} ({t.value_set.name})")
    existing = inst.attributes.get(t.qualified)
    if not replace and conflicts(existing, value, negated):
        raise AttributeConflict(
            f"{inst.identifier}: {t.qualified} is {existing.value!r}, cannot set {value!r}")
    if existing is not None and not replace and value is NIL:
        return existing
    a = InstanceAttribute(t.qualified, value, negated, probability)
    inst.attributes[t.qualified] = a
    return a


def _strip_optional(info: Infopedia, inst: ObjectInstance) -> None:
    for key in list(inst.attributes):
        t = info.attribute_types.get(key)
        if t is not None and t.optional_causal:
            del inst.attributes[key]
    for child in inst.structure:
        _strip_optional(info, child)


def clone_structural_parent(info: Infopedia, context: Context, from_time, to_time) -> ObjectInstance:
    """Copy the structural parent at ``from_time`` to ``to_time``, dropping optional causal features."""
    vs = context.time_set
    if from_time not in context.points:
        raise TimelineError(f"no time point {from_time!r} in context {context.identifier}")
    if to_time in context.points:
        raise TimelineError(f"time point {to_time!r} is already occupied")
    if not vs.contains(to_time) or vs.index(to_time) <= vs.index(from_time):
        raise TimelineError(f"{to_time!r} does not follow {from_time!r}")
    sp = context.points[from_time].clone()
    _strip_optional(info, sp)
    for inst in sp.walk():
        inst.placement.clear()
    context.points[to_time] = sp
    context.last_time = to_time
    return sp


def _instance_at(context: Context, identifier: str, time) -> ObjectInstance | None:
    sp = context.points.get(time)
    if sp is None:
        return None
    return sp if sp.identifier == identifier else sp.find(identifier)


def attribute_at(info: Infopedia, context: Context, identifier: str, type_name: str, time,
                 assumptions: GlobalAssumptions | None = None):
    """Value of an attribute at ``time`` under the global assumptions; None when absent."""
    a = assumptions or GlobalAssumptions()
    vs = context.time_set
    seen = [t for t in context.times() if _instance_at(context, identifier, t) is not None]
    if not seen:
        raise UnknownInstance(f"no instance {identifier} in context {context.identifier}")
    inst0 = _instance_at(context, identifier, seen[0])
    t = resolve_type(info, inst0, type_name)
    limit = vs.index(time)
    earlier = [p for p in context.times() if vs.index(p) <= limit]
    candidates = list(reversed(earlier)) if a.perpetuation else [p for p in earlier if p == time]
    present = False
    for p in candidates:
        inst = _instance_at(context, identifier, p)
        if inst is None:
            if not a.permanent_attachments:
                break
            continue
        present = True
        attr = inst.attributes.get(t.qualified)
        if attr is not None:
            return attr.value
    if not present and not (a.permanent_attachments and any(vs.index(p) <= limit for p in seen)):
        return None
    if a.empty_space and t.value_set.contains("Space") and t.value_set.kind == "enum":
        return "Space"
    return None
