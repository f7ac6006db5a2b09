"""Applying a rule's populated object class to a pool of object instances."""

from __future__ import annotations

from dataclasses import dataclass, field

from ross.errors import AttributeConflict, MatchFailure
from ross.facts.model import CAUSE, EFFECT, Context, ObjectInstance
from ross.facts.operations import attach, conflicts, set_state_attribute
from ross.infopedia import AttributeSetting, Infopedia, PopulatedNode
from ross.syntax import ast
from ross.values import Environment, ValueSet, evaluate

ANTECEDENT, CONSEQUENT = "antecedent", "consequent"


@dataclass
class Match:
    """Scratch state for one rule part: which instances are bound, and in which role."""

    used: set[str] = field(default_factory=set)
    roles: dict[str, str] = field(default_factory=dict)


def _setting_value(s: AttributeSetting, env: Environment, target: ValueSet | None):
    if s.kind == "val":
        return s.value
    if s.kind == "var":
        return env.get(s.value)
    if s.kind == "expr":
        return evaluate(s.value, env, target)
    raise MatchFailure(f"attribute form {s.kind} cannot be applied to an instance")


def _is_temporal(node: PopulatedNode, s: AttributeSetting) -> bool:
    ds = node.dimension_system
    return ds is not None and any(t is s.type for t in ds.temporal)


def _identity_ok(node: PopulatedNode, inst: ObjectInstance, env: Environment) -> bool:
    for s in node.qualitative:
        if not s.type.is_identity:
            continue
        if s.kind == "var":
            if s.value in env and env.get(s.value) != inst.identifier:
                return False
        elif _setting_value(s, env, None) != inst.identifier:
            return False
    return True


def _state_settings(node: PopulatedNode):
    return [s for s in node.qualitative if not s.type.is_identity]


def _conflicting(info: Infopedia, node: PopulatedNode, inst: ObjectInstance, env: Environment,
                 negated: bool) -> str | None:
    for s in _state_settings(node):
        t = info.attribute_type_for(inst.cls, s.type.qualified)
        value = _setting_value(s, env, t.value_set)
        existing = inst.attributes.get(t.qualified)
        if conflicts(existing, value, negated):
            return f"{inst.identifier}: {t.qualified} is {existing.value}, rule needs {value}"
    return None


def candidates(info: Infopedia, node: PopulatedNode, pool, env: Environment, match: Match,
               hints: dict[str, str | None] | None = None) -> list[ObjectInstance]:
    """Pool instances that may fill ``node``: class, role, non-overlap, multiplicity and identity."""
    out = []
    for inst in pool:
        if inst.identifier in match.used:
            continue
        if not info.compatible(inst.cls, node.cls):
            continue
        hint = (hints or {}).get(inst.identifier)
        if hint is not None and hint != node.role:
            continue
        if node.multiple and not inst.multiple:
            continue
        if not _identity_ok(node, inst, env):
            continue
        out.append(inst)
    return out


def apply_populated_object_class(info: Infopedia, node: PopulatedNode, pool, env: Environment,
                                 phase: str, *, match: Match | None = None,
                                 hints: dict[str, str | None] | None = None,
                                 forced: str | None = None, prefer: str | None = None,
                                 parent: ObjectInstance | None = None, context: Context | None = None,
                                 time_set: ValueSet | None = None, negated: bool = False,
                                 probability: float | None = None) -> tuple[ObjectInstance, bool]:
    """Match ``node`` against ``pool`` (or create an instance) and populate it.

    Returns the chosen instance and whether it was created.  In the antecedent
    phase a candidate whose attributes contradict the node is skipped, and when
    every candidate contradicts it MatchFailure is raised.  In the consequent
    phase values are overwritten.
    """
    match = match if match is not None else Match()
    pool = list(pool)
    if forced is not None:
        pool = [i for i in pool if i.identifier == forced]
        found = candidates(info, node, pool, env, match, None)
        if not found:
            raise MatchFailure(f"{node.name}: instance {forced} cannot fill this node")
    else:
        found = candidates(info, node, pool, env, match, hints)
        if prefer is not None:
            found.sort(key=lambda i: i.identifier != prefer)
    chosen, created = None, False
    reasons = []
    for inst in found:
        if phase == ANTECEDENT:
            why = _conflicting(info, node, inst, env, negated)
            if why is not None:
                reasons.append(why)
                continue
        chosen = inst
        break
    if chosen is None:
        if reasons:
            raise MatchFailure(f"{node.name}: " + "; ".join(reasons))
        if parent is None or context is None:
            raise MatchFailure(f"{node.name}: no instance of {node.cls} to match")
        chosen = attach(info, parent, node.cls, context.next_identifier(node.cls),
                        multiple=node.multiple)
        created = True

    # locational attributes: bridge-relative placement and timing
    for s in node.locational:
        temporal = _is_temporal(node, s)
        target = time_set if temporal and time_set is not None else s.type.value_set
        if s.kind == "var" and s.value not in env:
            default = chosen.placement.get(s.type.qualified)
            if temporal:
                default = context.last_time if context is not None else None
            env.bind(s.value, default if default is not None else target.first())
        chosen.placement[s.type.qualified] = _setting_value(s, env, target)

    for s in node.qualitative:
        if s.type.is_identity:
            if s.kind == "var" and s.value not in env:
                env.bind(s.value, chosen.identifier)
            continue
        t = info.attribute_type_for(chosen.cls, s.type.qualified)
        value = _setting_value(s, env, t.value_set)
        try:
            set_state_attribute(info, chosen, t.qualified, value, negated, probability,
                                replace=phase == CONSEQUENT)
        except AttributeConflict as e:
            raise MatchFailure(str(e)) from None
    chosen.causality = CAUSE if phase == ANTECEDENT else EFFECT
    match.used.add(chosen.identifier)
    match.roles.setdefault(node.role, chosen.identifier)
    return chosen, created
