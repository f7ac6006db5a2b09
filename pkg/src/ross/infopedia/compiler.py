"""Semantic analysis: statements in, a resolved Infopedia out.

Compilation runs in fixed passes so that definitions may appear in any
order: declarations and value sets first, then attribute types and
dimension systems, then object frame class shells (so every class name is
known), then everything that refers to classes. Errors are collected and
raised together as one CompileError; warnings stay on the Infopedia.
"""

from __future__ import annotations

import dataclasses

from ross.errors import CompileError, ExprError, LookupFailure, Position, RossError
from ross.infopedia.hierarchy import associate_behaviors, find_cycles, shadowed_types
from ross.infopedia.lexicon import build_lexicon
from ross.infopedia.model import (
    AttributeSetting,
    AttributeType,
    BehaviorClass,
    Designator,
    Diagnostic,
    DimensionSystem,
    Infopedia,
    LocationSet,
    ObjectFrameClass,
    Parameter,
    PopulatedNode,
    ReferenceNode,
    SpecificationSystem,
    TemplateClass,
)
from ross.syntax import ast
from ross.syntax.ast import NIL
from ross.values import LOCATIONAL, QUALITATIVE, Mapping, Transform, ValueSet, evaluate, variables

_SUPER_TYPES = {
    "Locational": LOCATIONAL,
    "LocationAttributeType": LOCATIONAL,
    "Qualitative": QUALITATIVE,
    "QualityAttributeType": QUALITATIVE,
}

_USAGES = {
    "Locational": LOCATIONAL,
    "LocationalValues": LOCATIONAL,
    "LocationValues": LOCATIONAL,
    "Qualitative": QUALITATIVE,
    "QualitativeValues": QUALITATIVE,
    "QualityValues": QUALITATIVE,
}

_STRUCTURE_TRAITS = ("Unit", "Compound", "Range")


def _normalize(word: str | None, table: dict[str, str]) -> str | None:
    if word is None:
        return None
    if word in table:
        return table[word]
    if word.startswith("Locat"):
        return LOCATIONAL
    if word.startswith("Qualit"):
        return QUALITATIVE
    return None


class _Abort(Exception):
    """Stops compiling one definition after its error has been recorded."""


class Compiler:
    def __init__(self):
        self.info = Infopedia()
        self.errors: list[Diagnostic] = []
        self.warnings: list[Diagnostic] = []
        self._pending_sets: dict[str, ast.ValueSetStmt] = {}
        self._resolving: set[str] = set()
        self._class_stmts: dict[str, ast.ObjectFrameClassStmt] = {}
        self._global_ds_stmts: dict[str, ast.DimensionSystemStmt] = {}

    # diagnostics

    def error(self, pos: Position | None, kind: str, message: str) -> None:
        self.errors.append(Diagnostic("error", pos, kind, message))

    def warn(self, pos: Position | None, kind: str, message: str) -> None:
        self.warnings.append(Diagnostic("warning", pos, kind, message))

    def fail(self, pos: Position | None, kind: str, message: str):
        self.error(pos, kind, message)
        raise _Abort

    def declare(self, index: dict, name: str, value, pos: Position | None, what: str) -> bool:
        if name in index:
            self.error(pos, "duplicate-definition", f"{what} {name} is already defined")
            return False
        index[name] = value
        return True

    # entry point

    def compile(self, statements: list[ast.Statement]) -> Infopedia:
        by_kind: dict[type, list] = {}
        for s in statements:
            by_kind.setdefault(type(s), []).append(s)
        get = lambda t: by_kind.get(t, [])  # noqa: E731

        for s in get(ast.IntegerDecl):
            self.declare(self.info.integers, s.name, s.value, s.pos, "integer")
        for s in get(ast.FloatDecl):
            self.declare(self.info.floats, s.name, s.value, s.pos, "floating-point constant")
        for s in get(ast.StringDecl):
            self.declare(self.info.strings, s.name, s.value, s.pos, "string")

        for s in get(ast.ValueSetStmt):
            if s.name in self._pending_sets or s.name in self.info.value_sets:
                self.error(s.pos, "duplicate-definition", f"value set {s.name} is already defined")
            else:
                self._pending_sets[s.name] = s
        for name in list(self._pending_sets):
            self._global_value_set(name)

        for s in get(ast.AttributeTypeStmt):
            self._guard(self._global_attribute_type, s)
        for s in get(ast.DimensionSystemStmt):
            if s.name in self._global_ds_stmts:
                self.error(s.pos, "duplicate-definition", f"dimension system {s.name} is already defined")
            else:
                self._global_ds_stmts[s.name] = s
        for s in get(ast.DimensionSystemStmt):
            if s.name not in self.info.dimension_systems and self._global_ds_stmts.get(s.name) is s:
                self._guard(self._global_dimension_system, s)
        for s in get(ast.SpecificationSystemStmt):
            self._guard(self._spec_system, s, None)

        classes = get(ast.ObjectFrameClassStmt)
        for s in classes:
            self._class_shell(s, None)
        for name, s in self._class_stmts.items():
            self._guard(self._class_locals, s)
        self._check_hierarchy()

        for s in get(ast.AttributeStmt):
            self.error(s.pos, "misplaced-attribute",
                       f"attribute {s.name} must appear inside an object frame class")

        order_stmts = get(ast.BehaviorClassStmt)
        for i, s in enumerate(order_stmts):
            self.info.behavior_classes.setdefault(s.name, [])
        for name, s in self._class_stmts.items():
            self._guard(self._class_body, s)

        for s in get(ast.MappingStmt):
            self._guard(self._mapping, s)
        for s in get(ast.TransformStmt):
            self._guard(self._transform, s)
        for s in get(ast.TemplateClassStmt):
            self._guard(self._template, s)
        for s in get(ast.PopulatedObjectClassStmt):
            self._guard(self._standalone_poc, s)
        for i, s in enumerate(order_stmts):
            self._guard(self._behavior_class, s, i)
        for name, s in self._class_stmts.items():
            self._guard(self._designators, s)

        if not self.errors:
            associate_behaviors(self.info)
            build_lexicon(self.info)
        self.info.diagnostics = self.errors + self.warnings
        if self.errors:
            raise CompileError(self.errors + self.warnings)
        return self.info

    def _guard(self, fn, *args):
        try:
            fn(*args)
        except _Abort:
            pass
        except LookupFailure as e:
            pos = getattr(args[0], "pos", None) if args else None
            self.error(pos, "unresolved-reference", str(e))

    # constants and expressions

    def _bound(self, b: ast.Bound, pos) -> int:
        if isinstance(b, int):
            return b
        if b in self.info.integers:
            return self.info.integers[b]
        self.fail(pos, "unresolved-reference", f"integer constant {b} is not defined")

    def _probability(self, expr: ast.Expr | None, pos, what: str) -> float | None:
        if expr is None:
            return None
        try:
            v = evaluate(expr)
        except ExprError as e:
            self.fail(pos, "bad-probability", f"{what}: {e}")
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not 0.0 <= v <= 1.0:
            self.fail(pos, "bad-probability", f"{what}: probability {v!r} is not within [0, 1]")
        return float(v)

    # value sets

    def _global_value_set(self, name: str) -> ValueSet | None:
        if name in self.info.value_sets:
            return self.info.value_sets[name]
        stmt = self._pending_sets.get(name)
        if stmt is None:
            return None
        if name in self._resolving:
            self.error(stmt.pos, "rename-cycle", f"value set {name} renames itself")
            return None
        self._resolving.add(name)
        try:
            vs = self._value_set(stmt, name, global_scope=True)
        except _Abort:
            return None
        finally:
            self._resolving.discard(name)
        self.info.value_sets[name] = vs
        return vs

    def _value_set(self, stmt: ast.ValueSetStmt, name: str, global_scope: bool = False,
                   default_usage: str | None = None) -> ValueSet:
        usage = _normalize(stmt.usage, _USAGES) if stmt.usage is not None else default_usage
        if stmt.usage is not None and usage is None:
            self.fail(stmt.pos, "bad-usage", f"value set {name}: unknown super type usage {stmt.usage}")
        if stmt.base is not None and self._global_value_set(stmt.base) is None:
            self.fail(stmt.pos, "unresolved-reference", f"value set {name}: base value set {stmt.base} is not defined")
        ordered = bool(stmt.ordered)
        c = stmt.content
        if isinstance(c, ast.ConstantSetName):
            return ValueSet(name, "constant", usage=usage, ordered=ordered, base=stmt.base, constant=c.name)
        if isinstance(c, ast.RenameSet):
            target = self._global_value_set(c.target) if c.target != name or not global_scope else None
            if target is None:
                self.fail(stmt.pos, "unresolved-reference", f"value set {name}: renamed set {c.target} is not defined")
            return dataclasses.replace(target, name=name, usage=usage or target.usage,
                                       ordered=ordered or target.ordered, base=stmt.base or target.base)
        if isinstance(c, ast.RangeContent):
            lo = self._bound(c.range.lower, stmt.pos)
            hi = self._bound(c.range.upper, stmt.pos)
            if lo > hi:
                self.fail(stmt.pos, "empty-range", f"value set {name}: lower bound {lo} exceeds upper bound {hi}")
            return ValueSet(name, "range", usage=usage, ordered=True, base=stmt.base, lower=lo, upper=hi)
        members: list[str] = []
        dictionaries = {}
        for e in c.entries:
            if e.value in members:
                self.fail(e.pos or stmt.pos, "duplicate-value", f"value set {name}: value {e.value} is listed twice")
            members.append(e.value)
            if e.dictionaries:
                dictionaries[e.value] = e.dictionaries
        return ValueSet(name, "enum", usage=usage, ordered=ordered, base=stmt.base,
                        members=tuple(members), dictionaries=dictionaries)

    # attribute types

    def _attribute_type(self, stmt: ast.AttributeTypeStmt, owner: str | None,
                        default_super: str) -> AttributeType:
        qualified = f"{owner}.{stmt.name}" if owner else stmt.name
        super_type = _normalize(stmt.super_type, _SUPER_TYPES) if stmt.super_type else default_super
        if super_type is None:
            self.fail(stmt.pos, "bad-super-type", f"attribute type {qualified}: unknown super type {stmt.super_type}")
        if stmt.value_set_ref is not None:
            vs = self._global_value_set(stmt.value_set_ref)
            if vs is None:
                self.fail(stmt.pos, "unresolved-reference",
                          f"attribute type {qualified}: value set {stmt.value_set_ref} is not defined")
        else:
            vs = self._value_set(stmt.value_set, f"{qualified}.{stmt.value_set.name}", default_usage=super_type)
        if vs.usage is not None and vs.usage != super_type:
            self.fail(stmt.pos, "usage-mismatch",
                      f"attribute type {qualified} is {super_type} but its value set is {vs.usage}")
        if super_type == LOCATIONAL and vs.is_float:
            self.fail(stmt.pos, "locational-float-set",
                      f"attribute type {qualified}: locational value sets must be integer-based")
        if super_type == QUALITATIVE and vs.kind == "range" and vs.lower < 0:
            self.fail(stmt.pos, "negative-qualitative-range",
                      f"attribute type {qualified}: qualitative numeric values must be natural numbers")
        if stmt.optional_causal and super_type != QUALITATIVE:
            self.fail(stmt.pos, "optional-causal-not-qualitative",
                      f"attribute type {qualified}: an optional causal feature must be qualitative")
        prob = self._probability(stmt.probability, stmt.pos, f"attribute type {qualified}")
        return AttributeType(stmt.name, qualified, owner, super_type, vs, bool(stmt.state),
                             bool(stmt.optional_causal), prob, None, stmt.pos)

    def _global_attribute_type(self, stmt: ast.AttributeTypeStmt) -> None:
        t = self._attribute_type(stmt, None, QUALITATIVE)
        self.declare(self.info.attribute_types, t.name, t, stmt.pos, "attribute type")

    # dimension and specification systems

    def _members(self, members: tuple, owner: str, cls: ObjectFrameClass | None) -> list[AttributeType]:
        out: list[AttributeType] = []
        for m in members or ():
            if isinstance(m, ast.AttributeTypeStmt):
                t = self._attribute_type(m, owner, LOCATIONAL)
                self.declare(self.info.attribute_types, t.qualified, t, m.pos, "attribute type")
            elif isinstance(m, ast.AttributeTypeRef):
                t = self._type_by_name(m.name, cls, m.pos)
            else:
                target = self._type_by_name(m.target, cls, m.pos)
                t = dataclasses.replace(target, name=m.name, qualified=f"{owner}.{m.name}",
                                        owner=owner, alias_of=target.qualified, pos=m.pos)
            if any(o.name == t.name for o in out):
                self.fail(m.pos, "duplicate-definition", f"{owner} lists attribute type {t.name} twice")
            out.append(t)
        return out

    def _type_by_name(self, name: str, cls: ObjectFrameClass | None, pos) -> AttributeType:
        if cls is not None and name in cls.attribute_types:
            return cls.attribute_types[name]
        if name in self.info.attribute_types:
            return self.info.attribute_types[name]
        self.fail(pos, "unresolved-reference", f"attribute type {name} is not defined")

    def _dimension_system(self, stmt: ast.DimensionSystemStmt, owner: str | None,
                          cls: ObjectFrameClass | None) -> DimensionSystem:
        qualified = f"{owner}.{stmt.name}" if owner else stmt.name
        if stmt.rename is not None:
            target = self._global_ds(stmt.rename, exclude=None if owner else stmt.name)
            if target is None:
                self.fail(stmt.pos, "unresolved-reference",
                          f"dimension system {qualified}: renamed system {stmt.rename} is not defined")
            return DimensionSystem(stmt.name, qualified, owner, target.spatial, target.temporal,
                                   stmt.role_trait or target.role_trait, stmt.pos)
        if stmt.merge is not None:
            spatial: list[AttributeType] = []
            temporal: list[AttributeType] = []
            for part in stmt.merge:
                ds = self._global_ds(part, exclude=None if owner else stmt.name)
                if ds is None:
                    self.fail(stmt.pos, "unresolved-reference",
                              f"dimension system {qualified}: merged system {part} is not defined")
                for t in ds.types:
                    if any(o.name == t.name for o in spatial + temporal):
                        self.fail(stmt.pos, "merge-collision",
                                  f"dimension system {qualified}: attribute type {t.name} appears in more than one merged system")
                spatial.extend(ds.spatial)
                temporal.extend(ds.temporal)
            return DimensionSystem(stmt.name, qualified, owner, tuple(spatial), tuple(temporal),
                                   stmt.role_trait, stmt.pos)
        spatial = self._members(stmt.spatial, qualified, cls)
        temporal = self._members(stmt.temporal, qualified, cls)
        for t in spatial + temporal:
            if not t.is_locational:
                self.fail(t.pos or stmt.pos, "not-locational",
                          f"dimension system {qualified}: attribute type {t.name} is not locational")
        return DimensionSystem(stmt.name, qualified, owner, tuple(spatial), tuple(temporal),
                               stmt.role_trait, stmt.pos)

    def _global_ds(self, name: str, exclude: str | None) -> DimensionSystem | None:
        if name == exclude:
            return None
        if name in self.info.dimension_systems:
            return self.info.dimension_systems[name]
        stmt = self._global_ds_stmts.get(name)
        if stmt is None or name in self._resolving:
            return None
        self._resolving.add(name)
        try:
            self._global_dimension_system(stmt)
        except _Abort:
            return None
        finally:
            self._resolving.discard(name)
        return self.info.dimension_systems.get(name)

    def _global_dimension_system(self, stmt: ast.DimensionSystemStmt) -> None:
        if stmt.name in self.info.dimension_systems:
            return
        ds = self._dimension_system(stmt, None, None)
        self.info.dimension_systems[ds.name] = ds

    def _spec_system(self, stmt: ast.SpecificationSystemStmt, cls: ObjectFrameClass | None) -> SpecificationSystem:
        owner = cls.name if cls else None
        qualified = f"{owner}.{stmt.name}" if owner else stmt.name
        ds = self._dimension_system(stmt.dimension_system, qualified, cls)
        quality = []
        for m in stmt.quality_types:
            if isinstance(m, ast.AttributeTypeStmt):
                t = self._attribute_type(m, qualified, QUALITATIVE)
                self.declare(self.info.attribute_types, t.qualified, t, m.pos, "attribute type")
            elif isinstance(m, ast.AttributeTypeRef):
                t = self._type_by_name(m.name, cls, m.pos)
            else:
                target = self._type_by_name(m.target, cls, m.pos)
                t = dataclasses.replace(target, name=m.name, qualified=f"{qualified}.{m.name}",
                                        owner=qualified, alias_of=target.qualified, pos=m.pos)
            quality.append(t)
        ss = SpecificationSystem(stmt.name, qualified, owner, ds, tuple(quality), stmt.pos)
        if cls is None:
            self.declare(self.info.spec_systems, ss.name, ss, stmt.pos, "specification system")
        else:
            self.declare(self.info.spec_systems, qualified, ss, stmt.pos, "specification system")
        return ss

    # object frame classes

    def _class_shell(self, stmt: ast.ObjectFrameClassStmt, parent: str | None) -> None:
        if stmt.structure_trait is not None and stmt.structure_trait not in _STRUCTURE_TRAITS:
            self.error(stmt.pos, "bad-structure-trait",
                       f"class {stmt.name}: structure trait {stmt.structure_trait} is not one of {', '.join(_STRUCTURE_TRAITS)}")
        try:
            prob = self._probability(stmt.probability_in_parent, stmt.pos, f"class {stmt.name}")
        except _Abort:
            prob = None
        children = tuple(c.name for c in stmt.structure or ())
        c = ObjectFrameClass(
            stmt.name,
            sealed=bool(stmt.sealed),
            structure_trait=stmt.structure_trait,
            multiple=bool(stmt.multiple),
            structural_parent=bool(stmt.structural_parent),
            mass_substance=bool(stmt.mass_substance),
            probability_in_parent=prob,
            cardinality=stmt.cardinality,
            dictionaries=stmt.dictionaries,
            higher_classes=stmt.higher_classes or (),
            sp_bases=stmt.sp_bases or (),
            structure=children,
            parent=parent,
            pos=stmt.pos,
        )
        if not self.declare(self.info.object_frame_classes, stmt.name, c, stmt.pos, "object frame class"):
            return
        self._class_stmts[stmt.name] = stmt
        if stmt.structure_trait == "Unit" and children:
            self.error(stmt.pos, "unit-with-structure", f"class {stmt.name} is a Unit but has structure children")
        for child in stmt.structure or ():
            self._class_shell(child, stmt.name)

    def _class_locals(self, stmt: ast.ObjectFrameClassStmt) -> None:
        c = self.info.object_frame_classes[stmt.name]
        for t_stmt in stmt.attribute_types or ():
            t = self._attribute_type(t_stmt, c.name, QUALITATIVE)
            if t.name in c.attribute_types:
                self.fail(t_stmt.pos, "duplicate-definition", f"class {c.name} defines attribute type {t.name} twice")
            c.attribute_types[t.name] = t
            self.declare(self.info.attribute_types, t.qualified, t, t_stmt.pos, "attribute type")
        for ds_stmt in stmt.dimension_systems or ():
            ds = self._dimension_system(ds_stmt, c.name, c)
            if ds.name in c.dimension_systems:
                self.fail(ds_stmt.pos, "duplicate-definition",
                          f"class {c.name} defines dimension system {ds.name} twice")
            c.dimension_systems[ds.name] = ds
            self.declare(self.info.dimension_systems, ds.qualified, ds, ds_stmt.pos, "dimension system")
        for ss_stmt in stmt.spec_systems or ():
            ss = self._spec_system(ss_stmt, c)
            c.spec_systems[ss.name] = ss

    def _check_hierarchy(self) -> None:
        classes = self.info.object_frame_classes
        for c in classes.values():
            for h in c.higher_classes:
                if h not in classes:
                    self.error(c.pos, "unresolved-reference", f"class {c.name}: higher class {h} is not defined")
            for b in c.sp_bases:
                if b not in classes:
                    self.error(c.pos, "unresolved-reference",
                               f"class {c.name}: structural parent class {b} is not defined")
                elif not classes[b].structural_parent:
                    self.error(c.pos, "not-structural-parent",
                               f"class {c.name}: {b} is not a structural parent class")
        graph = {n: tuple(h for h in c.higher_classes if h in classes) for n, c in classes.items()}
        for cycle in find_cycles(graph):
            self.error(classes[cycle[0]].pos, "inheritance-cycle", " -> ".join(cycle))
        if any(d.kind == "inheritance-cycle" for d in self.errors):
            return
        for name in classes:
            for tname, winner, hidden in shadowed_types(self.info, name):
                if name == winner:
                    self.warn(classes[name].pos, "shadowed-attribute-type",
                              f"class {name}: attribute type {tname} hides the one from {hidden}")

    def _class_body(self, stmt: ast.ObjectFrameClassStmt) -> None:
        c = self.info.object_frame_classes[stmt.name]
        attrs = []
        for a in stmt.attributes or ():
            try:
                t = self.info.attribute_type_for(c.name, a.base.ref)
            except LookupFailure as e:
                self.error(a.pos, "unresolved-reference", f"class {c.name}: {e}")
                continue
            try:
                value = self._checked_value(t, a.base, f"class {c.name} attribute {a.name}")
                prob = self._probability(a.probability, a.pos, f"class {c.name} attribute {a.name}")
            except _Abort:
                continue
            attrs.append(AttributeSetting(t, a.base.kind, value, prob))
        c.attributes = tuple(attrs)
        rel = stmt.relationship
        if rel is not None:
            c.at_locations = tuple(self._location_set(c, s) for s in rel.at_locations or ())
            c.extents = tuple(self._location_set(c, s) for s in rel.extents or ())

    def _class_ds(self, c: ObjectFrameClass, name: str) -> DimensionSystem:
        """A dimension system seen from ``c``: own view, enclosing classes, then global."""
        cur: str | None = c.name
        while cur is not None:
            v = self.info.view(cur)
            if name in v.dimension_systems:
                return v.dimension_systems[name]
            cur = self.info.object_frame_classes[cur].parent
        for b in self.info.view(c.name).sp_bases:
            v = self.info.view(b)
            if name in v.dimension_systems:
                return v.dimension_systems[name]
        return self.info.dimension_system_for(None, name)

    def _location_set(self, c: ObjectFrameClass, s: ast.DimensionSet) -> LocationSet:
        try:
            ds = self._class_ds(c, s.dimension_system)
        except LookupFailure as e:
            self.fail(s.pos, "unresolved-reference", f"class {c.name}: {e}")
        settings = []
        for a in s.attributes:
            t = ds.find(a.ref)
            if t is None:
                self.fail(a.pos, "unresolved-reference",
                          f"class {c.name}: attribute type {a.ref} is not part of dimension system {ds.name}")
            settings.append(AttributeSetting(t, a.kind, self._checked_value(t, a, f"class {c.name}")))
        return LocationSet(s.kind, ds, tuple(settings))

    def _checked_value(self, t: AttributeType, base: ast.AttributeBase, where: str):
        """Membership check for ``val`` and ``range`` forms; other forms pass through."""
        if base.kind == "val":
            v = base.value
            if isinstance(v, str) and v is not NIL and t.value_set.is_numeric:
                try:
                    v = int(v)
                except ValueError:
                    try:
                        v = float(v)
                    except ValueError:
                        pass
            if not t.value_set.contains(v):
                self.fail(base.pos, "membership",
                          f"{where}: {v!r} is not a member of {t.qualified} ({t.value_set.name})")
            return v
        if base.kind == "range":
            vs = t.value_set
            lo = self._bound(base.value.lower, base.pos)
            hi = self._bound(base.value.upper, base.pos)
            if lo > hi or not (vs.is_integer and vs.contains(lo) and vs.contains(hi)):
                self.fail(base.pos, "membership",
                          f"{where}: range {{{lo} .. {hi}}} is not a subset of {t.qualified} ({vs.name})")
            return ast.ValueRange(lo, hi)
        return base.value

    def _designators(self, stmt: ast.ObjectFrameClassStmt) -> None:
        c = self.info.object_frame_classes[stmt.name]
        out = {}
        for field_name in ("behaviors_potential", "behaviors_actual"):
            ds = []
            for d in getattr(stmt, field_name) or ():
                if d.name not in self.info.behavior_classes:
                    self.error(d.pos, "unresolved-reference",
                               f"class {c.name}: behavior class {d.name} is not defined")
                    continue
                try:
                    prob = self._probability(d.probability, d.pos, f"class {c.name} designator {d.name}")
                except _Abort:
                    continue
                ds.append(Designator(d.name, prob, "potential" if field_name == "behaviors_potential" else "actual"))
            out[field_name] = tuple(ds)
        c.behaviors_potential = out["behaviors_potential"]
        c.behaviors_actual = out["behaviors_actual"]

    # mappings and transforms

    def _mapping(self, stmt: ast.MappingStmt) -> None:
        src = self._global_value_set(stmt.source)
        dst = self._global_value_set(stmt.dest)
        for name, vs in ((stmt.source, src), (stmt.dest, dst)):
            if vs is None:
                self.fail(stmt.pos, "unresolved-reference", f"mapping {stmt.name}: value set {name} is not defined")
        stray = sorted(set(variables(stmt.function)) - {"x$"})
        if stray:
            self.fail(stmt.pos, "mapping-variable",
                      f"mapping {stmt.name}: the function may use only x$, found {', '.join(stray)}")
        self.declare(self.info.mappings, stmt.name, Mapping(stmt.name, src, dst, stmt.function),
                     stmt.pos, "mapping")

    def _group(self, ref: str, pos, what: str) -> list[AttributeType]:
        ds_name, _, group = ref.rpartition(".")
        if not ds_name or group not in ("SpatialAttributeTypes", "TemporalAttributeTypes"):
            self.fail(pos, "bad-group", f"{what}: {ref} does not name a dimension system attribute group")
        ds = self.info.dimension_systems.get(ds_name)
        if ds is None:
            self.fail(pos, "unresolved-reference", f"{what}: dimension system {ds_name} is not defined")
        return list(ds.spatial if group == "SpatialAttributeTypes" else ds.temporal)

    def _transform(self, stmt: ast.TransformStmt) -> None:
        what = f"transform {stmt.name}"
        src = self._group(stmt.source, stmt.pos, what)
        dst = self._group(stmt.dest, stmt.pos, what)
        params = stmt.routine.params
        if len(params) != 2 or params[1].length is None:
            self.fail(stmt.pos, "transform-parameters",
                      f"{what}: the routine needs one inbound parameter and one outbound array")
        if params[1].length != len(dst):
            self.fail(stmt.pos, "transform-parameters",
                      f"{what}: outbound array length {params[1].length} does not match {len(dst)} dest attribute types")
        inbound = params[0].length or 1
        if inbound != len(src):
            self.fail(stmt.pos, "transform-parameters",
                      f"{what}: inbound parameter covers {inbound} values but the source group has {len(src)}")
        t = Transform(stmt.name, stmt.source, stmt.dest, tuple(a.name for a in src),
                      tuple(a.name for a in dst), tuple(a.value_set for a in dst), stmt.routine)
        self.declare(self.info.transforms, stmt.name, t, stmt.pos, "transform")

    # templates and populated object classes

    def _resolve_class(self, ref: str | None, pos, what: str) -> str:
        if ref is None:
            self.fail(pos, "missing-reference", f"{what} needs an object frame class reference")
        if ref in self.info.object_frame_classes:
            return ref
        head, _, tail = ref.rpartition(".")
        if head and tail in self.info.object_frame_classes:
            holder = self._resolve_class(head, pos, what)
            if tail in self.info.view(holder).structure:
                return tail
        self.fail(pos, "unresolved-reference", f"{what}: object frame class {ref} is not defined")

    def _template(self, stmt: ast.TemplateClassStmt) -> None:
        what = f"template class {stmt.name}"
        sp = self._resolve_class(stmt.sp_ref, stmt.pos, what) if stmt.sp_ref else None
        cls = self._resolve_class(stmt.ofc_ref, stmt.pos, what)
        scope = self.info.object_frame_classes[sp or cls]
        ds = ss = None
        if stmt.spec_system is not None:
            ss = self._find_spec_system(scope, stmt.spec_system, stmt.pos, what)
            ds = ss.dimension_system
        if stmt.dimension_system is not None:
            ds = self._class_ds(scope, stmt.dimension_system)
        settings = []
        for a in stmt.attributes:
            t = ds.find(a.ref) if ds else None
            if t is None and ss is not None:
                t = next((q for q in ss.quality_types if q.name == a.ref), None)
            if t is None:
                t = self.info.attribute_type_for(cls, a.ref)
            settings.append(AttributeSetting(t, a.kind, self._checked_value(t, a, what)))
        if stmt.extents is not None:
            self._location_set(scope, stmt.extents)
        tc = TemplateClass(stmt.name, sp, cls, bool(stmt.shape_template), ds, ss, tuple(settings), stmt.pos)
        self.declare(self.info.template_classes, stmt.name, tc, stmt.pos, "template class")

    def _find_spec_system(self, scope: ObjectFrameClass, name: str, pos, what: str) -> SpecificationSystem:
        cur: str | None = scope.name
        while cur is not None:
            c = self.info.object_frame_classes[cur]
            for anc in (cur, *self.info.ancestors(cur)):
                ss = self.info.object_frame_classes[anc].spec_systems.get(name)
                if ss is not None:
                    return ss
            cur = c.parent
        if name in self.info.spec_systems:
            return self.info.spec_systems[name]
        self.fail(pos, "unresolved-reference", f"{what}: specification system {name} is not defined")

    def _populated(self, stmt: ast.PopulatedObjectClassStmt, bridge: str, what: str) -> PopulatedNode:
        cls = self._resolve_class(stmt.ofc_ref, stmt.pos, what)
        roles = [f for f in (stmt.passive, stmt.extra) if f]
        if len(roles) > 1:
            self.fail(stmt.pos, "conflicting-roles", f"{what}: more than one participant role flag is set")
        ds = None
        if stmt.dimension_system is not None:
            try:
                ds = self._class_ds(self.info.object_frame_classes[bridge], stmt.dimension_system)
            except LookupFailure as e:
                self.fail(stmt.pos, "unresolved-reference", f"{what}: {e}")
        loc, qual = [], []
        for a in stmt.attributes:
            t = ds.find(a.ref) if ds else None
            if t is not None:
                loc.append(AttributeSetting(t, a.kind, self._checked_value(t, a, what)))
                continue
            try:
                t = self.info.attribute_type_for(cls, a.ref)
            except LookupFailure as e:
                self.fail(a.pos, "unresolved-reference", f"{what}: {e}")
            target = loc if t.is_locational else qual
            target.append(AttributeSetting(t, a.kind, self._checked_value(t, a, what)))
        prob = self._probability(stmt.probability, stmt.pos, what)
        return PopulatedNode(stmt.name, cls, bool(stmt.binder_source), bool(stmt.passive), bool(stmt.extra),
                             bool(stmt.multiple), prob, ds, tuple(loc), tuple(qual), stmt.pos)

    def _standalone_poc(self, stmt: ast.PopulatedObjectClassStmt) -> None:
        what = f"populated object class {stmt.name}"
        if stmt.sp_ref is None:
            self.fail(stmt.pos, "missing-reference", f"{what} needs a <StructuralParentClass ref = .../>")
        sp = self._resolve_class(stmt.sp_ref, stmt.pos, what)
        node = self._populated(stmt, sp, what)
        self.declare(self.info.populated_classes, stmt.name, node, stmt.pos, "populated object class")

    # behavior classes

    def _behavior_class(self, stmt: ast.BehaviorClassStmt, order: int) -> None:
        what = f"behavior class {stmt.name}"
        if stmt.bridge is None:
            self.fail(stmt.pos, "missing-reference", f"{what} needs a <BridgeObjectFrameClass ref = .../>")
        bridge = self._resolve_class(stmt.bridge, stmt.pos, what)
        if not self.info.object_frame_classes[bridge].structural_parent:
            self.fail(stmt.pos, "not-structural-parent", f"{what}: bridge {bridge} is not a structural parent class")
        if not any(d.kind == "Dictionary" for d in stmt.dictionaries):
            self.error(stmt.pos, "missing-dictionary", f"{what} has no Dictionary section")
        parts = {}
        failed = False
        for label, items in (("prior", stmt.prior), ("post", stmt.post)):
            nodes = []
            for item in items:
                try:
                    if isinstance(item, ast.PopulatedObjectClassStmt):
                        nodes.append(self._populated(item, bridge, f"{what} {item.name}"))
                    else:
                        nodes.append(self._reference(item, what))
                except _Abort:
                    failed = True
            parts[label] = tuple(nodes)
        if failed:
            raise _Abort
        b = BehaviorClass(
            stmt.name, order, bridge, bool(stmt.sealed), bool(stmt.causal_rule), stmt.direction or "Unspecified",
            bool(stmt.negation), tuple(d for d in stmt.dictionaries), stmt.modification or (),
            stmt.higher_classes or (), parts["prior"], parts["post"], stmt.pos,
        )
        self._check_binder(b)
        self._check_parameters(b)
        self.info.behavior_classes[stmt.name].append(b)

    def _reference(self, ref: ast.BehaviorReference, what: str) -> ReferenceNode:
        if ref.behavior not in self.info.behavior_classes:
            self.fail(ref.pos, "unresolved-reference", f"{what}: behavior class {ref.behavior} is not defined")
        params = {}
        for role in ("actor", "actee", "extra"):
            p = getattr(ref, role)
            if p is None:
                params[role] = None
                continue
            cls = self._resolve_class(p.class_ref, p.pos, f"{what} reference to {ref.behavior}")
            params[role] = Parameter(cls, p.expr)
        prob = self._probability(ref.probability, ref.pos, f"{what} reference to {ref.behavior}")
        return ReferenceNode(ref.behavior, prob, pos=ref.pos, **params)

    def _check_binder(self, b: BehaviorClass) -> None:
        nodes = b.populated()
        sources = [n for n in nodes if n.binder_source]
        uses_var = any(s.kind == "var" for n in nodes for s in n.locational)
        if len(sources) > 1:
            self.fail(b.pos, "binder-source", f"behavior class {b.name} has {len(sources)} binder source nodes")
        if uses_var and not sources:
            self.fail(b.pos, "binder-source",
                      f"behavior class {b.name} declares locational variables but has no binder source")

    def _check_parameters(self, b: BehaviorClass) -> None:
        own = {n.cls for n in b.populated()}
        for node in b.prior + b.post:
            if not isinstance(node, ReferenceNode):
                continue
            # a parameter may also name a class that only the referenced rule uses
            referenced = {n.cls for r in self.info.behavior_classes.get(node.behavior, ()) for n in r.populated()}
            classes = own | referenced
            for p in (node.actor, node.actee, node.extra):
                if p is not None and not any(self.info.compatible(p.cls, c) for c in classes):
                    self.fail(node.pos, "parameter-class",
                              f"behavior class {b.name}: parameter class {p.cls} of the reference to "
                              f"{node.behavior} appears in neither rule")


def compile_statements(statements: list[ast.Statement]) -> Infopedia:
    """Compile parsed statements; raises CompileError listing every error."""
    return Compiler().compile(statements)


def compile_files(paths, include_paths=()) -> Infopedia:
    from ross.syntax import parse_files

    return compile_statements(parse_files(paths, include_paths))


def check(statements: list[ast.Statement]) -> tuple[Infopedia | None, list[Diagnostic]]:
    """Compile without raising: the Infopedia (or None) and every diagnostic."""
    try:
        info = compile_statements(statements)
    except CompileError as e:
        return None, e.diagnostics
    except RossError as e:
        return None, [Diagnostic("error", None, "internal", str(e))]
    return info, list(info.diagnostics)
