"""Deterministic canonical rendering of Star syntax trees."""

from __future__ import annotations

from ross.syntax import ast


def format_number(v: int | float) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans are not Star numbers")
    if isinstance(v, int):
        return str(v)
    text = repr(float(v))
    if "e" in text or "E" in text or "inf" in text or "nan" in text:
        if v != v or v in (float("inf"), float("-inf")):
            raise ValueError(f"cannot render {v!r} as a Star number")
        text = f"{v:.20f}".rstrip("0")
        if text.endswith("."):
            text += "0"
    return text


def format_expr(e: ast.Expr) -> str:
    if isinstance(e, ast.Const):
        if isinstance(e.value, str):
            return f'"{e.value}"'
        return format_number(e.value)
    if isinstance(e, ast.Var):
        return e.name
    if isinstance(e, (ast.BinOp, ast.Compare)):
        return f"{format_expr(e.left)} {e.op} {format_expr(e.right)}"
    if isinstance(e, ast.Paren):
        return f"({format_expr(e.inner)})"
    raise TypeError(f"not an expression: {e!r}")


def format_bound(b: ast.Bound) -> str:
    return b if isinstance(b, str) else str(b)


def format_range(r: ast.ValueRange) -> str:
    return f"{{ {format_bound(r.lower)} .. {format_bound(r.upper)} }}"


def format_val(v) -> str:
    if v is ast.NIL:
        return '"nil"'
    if isinstance(v, str):
        return f'"{v}"'
    return format_number(v)


def format_attribute_base(a: ast.AttributeBase) -> str:
    if a.kind == "val":
        value = format_val(a.value)
    elif a.kind == "range":
        value = format_range(a.value)
    elif a.kind == "expr":
        value = format_expr(a.value)
    elif a.kind == "var":
        value = a.value
    else:
        value = f'"{a.value}"'
    return f"<Attribute ref = {a.ref} {a.kind} = {value} />"


def _flag(tag: str, key: str, value: str) -> str:
    return f"<{tag} {key} = {value} />"


def _bool(b: bool) -> str:
    return '"true"' if b else '"false"'


class _Out:
    def __init__(self):
        self.lines: list[str] = []
        self.depth = 0

    def line(self, text: str) -> None:
        self.lines.append("  " * self.depth + text)

    def open(self, head: str) -> None:
        self.line(head)
        self.line("(")
        self.depth += 1

    def close(self, tail: str = ");") -> None:
        self.depth -= 1
        # an empty section collapses to "Head ();"
        if tail == ");" and len(self.lines) >= 2 and self.lines[-1].strip() == "(":
            self.lines.pop()
            self.lines[-1] += " ();"
            return
        self.line(tail)


def _dictionaries(out: _Out, sections) -> None:
    groups: list[tuple[str, list[ast.DictionarySection]]] = []
    for sec in sections:
        if groups and groups[-1][0] == sec.kind:
            groups[-1][1].append(sec)
        else:
            groups.append((sec.kind, [sec]))
    for kind, secs in groups:
        out.open(kind)
        if secs[0].noun is not None:
            out.line(_flag("DictionaryWordsIsNoun", "val", _bool(secs[0].noun)))
        for sec in secs:
            words = ", ".join(f'"{w}"' for w in sec.words)
            out.line(f"{sec.language} ( {{ {words} }} );")
        out.close()


def _value_set(out: _Out, vs: ast.ValueSetStmt, keyword: bool = True) -> None:
    head = f'ValueSet "{vs.name}"' if keyword else f'"{vs.name}"'
    c = vs.content
    if isinstance(c, ast.ConstantSetName):
        out.line(f"{head} ({c.name});")
        return
    if isinstance(c, ast.RenameSet):
        out.line(f"{head} ({c.target});")
        return
    out.open(head)
    if vs.base is not None:
        out.line(_flag("BaseValueSet", "ref", vs.base))
    if vs.usage is not None:
        out.line(_flag("SuperTypeUsage", "val", f'"{vs.usage}"'))
    if vs.ordered is not None:
        out.line(_flag("OrderedCollection", "val", _bool(vs.ordered)))
    if isinstance(c, ast.RangeContent):
        out.line(format_range(c.range))
    else:
        out.line("{")
        out.depth += 1
        for i, entry in enumerate(c.entries):
            sep = "," if i < len(c.entries) - 1 else ""
            if not entry.dictionaries:
                out.line(f'"{entry.value}"{sep}')
            else:
                out.line(f'"{entry.value}" :')
                out.depth += 1
                _dictionaries(out, entry.dictionaries)
                out.depth -= 1
                if sep:
                    out.line(sep)
        out.depth -= 1
        out.line("}")
    out.close()


def _attribute_type(out: _Out, at: ast.AttributeTypeStmt, keyword: bool = True) -> None:
    out.open(f'AttributeType "{at.name}"' if keyword else f'"{at.name}"')
    if at.probability is not None:
        out.line(_flag("Probability", "expr", format_expr(at.probability)))
    if at.super_type is not None:
        out.line(_flag("SuperType", "val", f'"{at.super_type}"'))
    if at.state is not None:
        out.line(_flag("StateAttributeType", "val", _bool(at.state)))
    if at.optional_causal is not None:
        out.line(_flag("OptionalCausalFeature", "val", _bool(at.optional_causal)))
    if at.value_set_ref is not None:
        out.line(_flag("ValueSetName", "ref", at.value_set_ref))
    if at.value_set is not None:
        _value_set(out, at.value_set)
    out.close()


def _members(out: _Out, head: str, members) -> None:
    out.open(head)
    for m in members:
        if isinstance(m, ast.AttributeTypeRef):
            out.line(f"{m.name};")
        elif isinstance(m, ast.AttributeTypeAlias):
            out.line(f'"{m.name}" ({m.target});')
        else:
            _attribute_type(out, m, keyword=False)
    out.close()


def _dimension_system(out: _Out, ds: ast.DimensionSystemStmt) -> None:
    head = f'DimensionSystem "{ds.name}"'
    if ds.rename is not None:
        out.line(f"{head} ({ds.rename});")
        return
    if ds.merge is not None:
        out.open(head)
        out.line(f"Merge ({', '.join(ds.merge)});")
        out.close()
        return
    out.open(head)
    if ds.role_trait is not None:
        out.line(_flag("RoleTrait", "val", f'"{ds.role_trait}"'))
    out.open("LocationAttributeTypes")
    if ds.spatial is not None:
        _members(out, "SpatialAttributeTypes", ds.spatial)
    if ds.temporal is not None:
        _members(out, "TemporalAttributeTypes", ds.temporal)
    out.close()
    out.close()


def _spec_system(out: _Out, ss: ast.SpecificationSystemStmt) -> None:
    out.open(f'SpecificationSystem "{ss.name}"')
    _dimension_system(out, ss.dimension_system)
    if ss.quality_types:
        out.open("InnerContent")
        _members(out, "QualityAttributeTypes", ss.quality_types)
        out.close()
    out.close()


def _attribute(out: _Out, a: ast.AttributeStmt) -> None:
    out.open(f'Attribute "{a.name}"')
    if a.probability is not None:
        out.line(_flag("Probability", "expr", format_expr(a.probability)))
    out.line(format_attribute_base(a.base))
    out.close()


def _dimension_set(out: _Out, ds: ast.DimensionSet) -> None:
    out.open(ds.kind)
    if ds.dimension_system_type is not None:
        out.line(_flag("DimensionSystemType", "val", f'"{ds.dimension_system_type}"'))
    if ds.anchor is not None:
        out.line(f'<AnchorPoint type = "{ds.anchor.type}" val = "{ds.anchor.val}" />')
    out.line(_flag("DimensionSystem", "ref", ds.dimension_system))
    for a in ds.attributes:
        out.line(format_attribute_base(a))
    out.close()


def _names(out: _Out, head: str, names) -> None:
    if not names:
        out.line(f"{head} ();")
        return
    joined = ", ".join(f'"{n}"' for n in names)
    out.line(f"{head} ( {{ {joined} }} );")


def _designators(out: _Out, head: str, items) -> None:
    out.open(head)
    for d in items:
        out.open("BehaviorClassDesignator")
        out.line(_flag("BehaviorClassName", "val", f'"{d.name}"'))
        if d.probability is not None:
            out.line(_flag("Probability", "expr", format_expr(d.probability)))
        out.close()
    out.close()


def _object_frame_class(out: _Out, c: ast.ObjectFrameClassStmt) -> None:
    out.open(f'ObjectFrameClass "{c.name}"')
    if c.sealed is not None:
        out.line(_flag("SealedClass", "val", _bool(c.sealed)))
    if c.probability_in_parent is not None:
        out.line(_flag("ProbabilityInStructuralParent", "expr", format_expr(c.probability_in_parent)))
    if c.structure_trait is not None:
        out.line(_flag("StructureTrait", "val", f'"{c.structure_trait}"'))
    if c.multiple is not None:
        out.line(_flag("Multiple", "val", _bool(c.multiple)))
    if c.structural_parent is not None:
        out.line(_flag("StructuralParentClass", "val", _bool(c.structural_parent)))
    if c.mass_substance is not None:
        out.line(_flag("MassSubstance", "val", _bool(c.mass_substance)))
    if c.cardinality is not None:
        out.line(_flag("Cardinality", "val", format_val(c.cardinality)))
    _dictionaries(out, c.dictionaries)
    if c.higher_classes is not None:
        _names(out, "HigherClasses", c.higher_classes)
    if c.sp_bases is not None:
        _names(out, "StructuralParentClassesBase", c.sp_bases)
    if c.relationship is not None:
        r = c.relationship
        out.open("RelationshipToParent")
        if r.at_locations is not None:
            out.open("AtLocations")
            for s in r.at_locations:
                _dimension_set(out, s)
            out.close()
        if r.orientation is not None:
            out.line("OrientationSpecifiers ();")
        if r.extents is not None:
            out.open("OuterDimensionSystemExtents")
            for s in r.extents:
                _dimension_set(out, s)
            out.close()
        out.close()
    if c.attribute_types is not None:
        out.open("AttributeTypes")
        for at in c.attribute_types:
            _attribute_type(out, at)
        out.close()
    if c.dimension_systems is not None:
        out.open("DimensionSystems")
        for ds in c.dimension_systems:
            _dimension_system(out, ds)
        out.close()
    if c.spec_systems is not None:
        out.open("SpecificationSystems")
        for ss in c.spec_systems:
            _spec_system(out, ss)
        out.close()
    if c.relationship_types is not None:
        out.line("RelationshipTypes ();")
    if c.attributes is not None:
        out.open("Attributes")
        for a in c.attributes:
            _attribute(out, a)
        out.close()
    if c.composition is not None:
        out.line("Composition ();")
    if c.relationships is not None:
        out.line("Relationships ();")
    if c.structure is not None:
        out.open("Structure")
        for child in c.structure:
            _object_frame_class(out, child)
        out.close()
    if c.behaviors_potential is not None:
        _designators(out, "BehaviorsPotential", c.behaviors_potential)
    if c.behaviors_actual is not None:
        _designators(out, "BehaviorsActual", c.behaviors_actual)
    out.close()


def _template(out: _Out, t: ast.TemplateClassStmt) -> None:
    out.open(f'TemplateObjectClass "{t.name}"')
    if t.sp_ref is not None:
        out.line(_flag("StructuralParentClass", "ref", t.sp_ref))
    if t.ofc_ref is not None:
        out.line(_flag("ObjectFrameClass", "ref", t.ofc_ref))
    if t.shape_template is not None:
        out.line(_flag("ShapeTemplate", "val", _bool(t.shape_template)))
    if t.dimension_system is not None:
        out.line(_flag("DimensionSystem", "ref", t.dimension_system))
    if t.spec_system is not None:
        out.line(_flag("SpecificationSystem", "ref", t.spec_system))
    for a in t.attributes:
        out.line(format_attribute_base(a))
    if t.extents is not None:
        _dimension_set(out, t.extents)
    out.close()


def _populated(out: _Out, p: ast.PopulatedObjectClassStmt) -> None:
    out.open(f'PopulatedObjectClass "{p.name}"')
    if p.sp_ref is not None:
        out.line(_flag("StructuralParentClass", "ref", p.sp_ref))
    if p.ofc_ref is not None:
        out.line(_flag("ObjectFrameClass", "ref", p.ofc_ref))
    for tag, value in (("BinderSourceFlag", p.binder_source), ("PassiveParticipant", p.passive),
                       ("ExtraParticipant", p.extra), ("Multiple", p.multiple)):
        if value is not None:
            out.line(_flag(tag, "val", _bool(value)))
    if p.probability is not None:
        out.line(_flag("Probability", "expr", format_expr(p.probability)))
    if p.dimension_system is not None:
        out.line(_flag("DimensionSystem", "ref", p.dimension_system))
    if p.spec_system is not None:
        out.line(_flag("SpecificationSystem", "ref", p.spec_system))
    for a in p.attributes:
        out.line(format_attribute_base(a))
    out.close()


def _param(tag: str, p: ast.ParameterRef) -> str:
    text = f"<{tag} ref = {p.class_ref}"
    if p.expr is not None:
        text += f" expr = {format_expr(p.expr)}"
    return text + " />"


def _reference(out: _Out, r: ast.BehaviorReference) -> None:
    out.open("BehaviorClassReference")
    out.line(_flag("BehaviorClass", "ref", r.behavior))
    if r.probability is not None:
        out.line(_flag("Probability", "expr", format_expr(r.probability)))
    for tag, p in (("ParameterActor", r.actor), ("ParameterActee", r.actee), ("ParameterExtra", r.extra)):
        if p is not None:
            out.line(_param(tag, p))
    out.close()


def _rule_part(out: _Out, head: str, items) -> None:
    out.open(head)
    for item in items:
        if isinstance(item, ast.BehaviorReference):
            _reference(out, item)
        else:
            _populated(out, item)
    out.close()


def _behavior_class(out: _Out, b: ast.BehaviorClassStmt) -> None:
    out.open(f'BehaviorClass "{b.name}"')
    if b.sealed is not None:
        out.line(_flag("SealedClass", "val", _bool(b.sealed)))
    if b.causal_rule is not None:
        out.line(_flag("CausalRule", "val", _bool(b.causal_rule)))
    if b.direction is not None:
        out.line(_flag("RuleDirection", "type", f'"{b.direction}"'))
    if b.bridge is not None:
        out.line(_flag("BridgeObjectFrameClass", "ref", b.bridge))
    if b.negation is not None:
        out.line(_flag("Negation", "val", _bool(b.negation)))
    _dictionaries(out, b.dictionaries)
    if b.modification is not None:
        out.open("Modification")
        _dictionaries(out, b.modification)
        out.close()
    if b.higher_classes is not None:
        _names(out, "HigherClasses", b.higher_classes)
    _rule_part(out, "PriorStates", b.prior)
    _rule_part(out, "PostStates", b.post)
    out.close()


def _routine(out: _Out, r: ast.RoutineBody) -> None:
    out.line("bool Routine")
    out.line("{")
    out.depth += 1
    out.open("Parameters")
    for p in r.params:
        suffix = f"[{p.length}]" if p.length is not None else ""
        out.line(f"{p.type} {p.name}{suffix};")
    out.close()
    out.open("Locals")
    for loc in r.locals:
        out.line(f"int {loc.name} = {loc.initial};")
    out.close()
    _routine_items(out, r.body)
    out.depth -= 1
    out.line("}")


def _routine_block(out: _Out, items) -> None:
    out.line("{")
    out.depth += 1
    _routine_items(out, items)
    out.depth -= 1
    out.line("}")


def _routine_items(out: _Out, items) -> None:
    for st in items:
        if isinstance(st, ast.IfChain):
            for i, (cond, block) in enumerate(st.branches):
                kw = "if" if i == 0 else "else if"
                out.line(f'{kw} ({cond.name} == "{cond.literal}")')
                _routine_block(out, block)
            if st.otherwise is not None:
                out.line("else")
                _routine_block(out, st.otherwise)
        elif isinstance(st, ast.ArrayAssign):
            out.line(f"{st.array}[{st.index}] = {st.value};")
        elif isinstance(st, ast.ReturnStmt):
            out.line(f"Return {'true' if st.value else 'false'};")
        else:
            raise TypeError(f"not a routine statement: {st!r}")


def _statement(out: _Out, s) -> None:
    if isinstance(s, ast.IntegerDecl):
        out.line(f"Integer {s.name} = {s.value};")
    elif isinstance(s, ast.FloatDecl):
        out.line(f"FloatingPoint {s.name} = {format_number(s.value)};")
    elif isinstance(s, ast.StringDecl):
        out.line(f'String {s.name} = "{s.value}";')
    elif isinstance(s, ast.ValueSetStmt):
        _value_set(out, s)
    elif isinstance(s, ast.MappingStmt):
        out.open(f'Mapping "{s.name}"')
        out.line(_flag("Source", "ref", s.source))
        out.line(_flag("Dest", "ref", s.dest))
        out.line(_flag("Function", "expr", format_expr(s.function)))
        out.close()
    elif isinstance(s, ast.TransformStmt):
        out.open(f'Transform "{s.name}"')
        out.line(_flag("Source", "ref", s.source))
        out.line(_flag("Dest", "ref", s.dest))
        _routine(out, s.routine)
        out.close()
    elif isinstance(s, ast.AttributeTypeStmt):
        _attribute_type(out, s)
    elif isinstance(s, ast.AttributeStmt):
        _attribute(out, s)
    elif isinstance(s, ast.DimensionSystemStmt):
        _dimension_system(out, s)
    elif isinstance(s, ast.SpecificationSystemStmt):
        _spec_system(out, s)
    elif isinstance(s, ast.ObjectFrameClassStmt):
        _object_frame_class(out, s)
    elif isinstance(s, ast.TemplateClassStmt):
        _template(out, s)
    elif isinstance(s, ast.PopulatedObjectClassStmt):
        _populated(out, s)
    elif isinstance(s, ast.BehaviorClassStmt):
        _behavior_class(out, s)
    else:
        raise TypeError(f"not a statement: {s!r}")


def pretty_print(statements) -> str:
    """Render statements as canonical Star text that parses back to an equal tree."""
    out = _Out()
    for i, s in enumerate(statements):
        if i:
            out.lines.append("")
        _statement(out, s)
    return "\n".join(out.lines) + "\n"
