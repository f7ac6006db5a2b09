"""Mappings between value sets and transforms between dimension-system groups."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ross.errors import MembershipError, OutOfRange, RoutineError, TransformFailed
from ross.syntax import ast
from ross.values.evaluate import Environment, evaluate
from ross.values.routine import run_routine
from ross.values.valueset import Raw, ValueSet


@dataclass(frozen=True)
class Mapping:
    name: str
    source: ValueSet
    dest: ValueSet
    function: ast.Expr


@dataclass(frozen=True)
class Transform:
    """A compiled transform: attribute types of the source and dest groups in order."""

    name: str
    source_ref: str
    dest_ref: str
    source_types: tuple[str, ...]
    dest_types: tuple[str, ...]
    dest_sets: tuple[ValueSet, ...]
    routine: ast.RoutineBody


def integerize(v):
    """Truncate toward zero."""
    if isinstance(v, float):
        if not math.isfinite(v):
            raise OutOfRange(f"{v!r} has no integer value")
        return math.trunc(v)
    return v


def apply_mapping(m: Mapping, v: Raw) -> Raw:
    if not m.source.contains(v):
        raise MembershipError(f"{v!r} is not a member of source value set {m.source.name}")
    result = evaluate(m.function, Environment({"x$": v}))
    if m.dest.is_integer:
        result = integerize(result)
    if not m.dest.contains(result):
        raise OutOfRange(f"mapping {m.name} yields {result!r}, outside {m.dest.name}")
    return result


def apply_transform(t: Transform, source_attrs: dict[str, Raw]) -> dict[str, Raw]:
    """Run the transform routine and pair its outputs with the dest group."""
    missing = [n for n in t.source_types if n not in source_attrs]
    extra = [n for n in source_attrs if n not in t.source_types]
    if missing or extra:
        raise TransformFailed(
            f"transform {t.name} needs exactly {list(t.source_types)}, got {list(source_attrs)}"
        )
    params = t.routine.params
    if len(params) != 2:
        raise RoutineError(f"transform {t.name} routine needs one source and one dest parameter")
    src, dst = params
    if src.length is None:
        if len(t.source_types) != 1:
            raise RoutineError(f"transform {t.name}: scalar source parameter for a group of {len(t.source_types)}")
        args = {src.name: source_attrs[t.source_types[0]]}
    else:
        args = {src.name: [source_attrs[n] for n in t.source_types]}
    if dst.length != len(t.dest_types):
        raise RoutineError(
            f"transform {t.name}: dest array length {dst.length} does not match {len(t.dest_types)} attribute types"
        )
    outputs, ok = run_routine(t.routine, args)
    if not ok:
        raise TransformFailed(f"transform {t.name} routine returned false")
    result: dict[str, Raw] = {}
    for name, vs, value in zip(t.dest_types, t.dest_sets, outputs[dst.name]):
        if not vs.contains(value):
            raise MembershipError(f"transform {t.name}: {value!r} is not a member of {vs.name} ({name})")
        result[name] = value
    return result
