"""External XML form of instance models: emit, parse and normalized comparison."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from ross.errors import LookupFailure, MembershipError, XmlFormatError
from ross.facts import (
    Context,
    GlobalAssumptions,
    InstanceAttribute,
    InstanceModel,
    ObjectInstance,
    TranscriptHeader,
)
from ross.infopedia import Infopedia
from ross.syntax.ast import NIL

XML_DECLARATION = '<?xml version="1.0" encoding="US-ASCII" standalone="yes"?>'
_INDENT = "  "


def _render(v) -> str:
    if v is NIL:
        return "nil"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _bool(v: bool) -> str:
    return "true" if v else "false"


class _Writer:
    def __init__(self):
        self.lines: list[str] = []
        self.depth = 0

    def line(self, text: str) -> None:
        self.lines.append(_INDENT * self.depth + text)

    def open(self, tag: str, **attrs) -> None:
        self.line(f"<{tag}{_attrs(attrs)}>")
        self.depth += 1

    def close(self, tag: str) -> None:
        self.depth -= 1
        self.line(f"</{tag}>")

    def empty(self, tag: str, **attrs) -> None:
        self.line(f"<{tag}{_attrs(attrs)}/>")

    def text(self, tag: str, body: str, **attrs) -> None:
        self.line(f"<{tag}{_attrs(attrs)}>{escape(body)}</{tag}>")


def _attrs(attrs: dict) -> str:
    return "".join(f" {k.rstrip('_')}={quoteattr(str(v))}" for k, v in attrs.items() if v is not None)


def _emit_attribute(w: _Writer, a: InstanceAttribute) -> None:
    w.text("Attribute", f"{a.type} = {_render(a.value)}",
           negated="true" if a.negated else None,
           probability=None if a.probability is None else _render(a.probability))


def _emit_component(w: _Writer, inst: ObjectInstance) -> None:
    w.open("Component", class_=inst.cls, instance=inst.identifier, content=" ".join(inst.content),
           multiple="true" if inst.multiple else None)
    if inst.relationship:
        w.open("RelationshipToParent")
        for k, v in inst.relationship.items():
            w.text("Attribute", f"{k} = {_render(v)}")
        w.close("RelationshipToParent")
    if inst.attributes:
        w.open("Attributes")
        for a in inst.attributes.values():
            _emit_attribute(w, a)
        w.close("Attributes")
    else:
        w.empty("Attributes")
    if inst.structure:
        _emit_structure(w, inst.structure)
    w.close("Component")


def _emit_structure(w: _Writer, children: list[ObjectInstance]) -> None:
    if not children:
        w.empty("InstanceStructure")
        return
    w.open("InstanceStructure")
    for c in children:
        _emit_component(w, c)
    w.close("InstanceStructure")


def emit_instance_model(model: InstanceModel) -> str:
    w = _Writer()
    w.line(XML_DECLARATION)
    w.open("InstanceModel")
    w.open("TranscriptHeader")
    w.empty("TextSource", value=model.header.text_source)
    if model.header.document_file is not None:
        w.empty("DocumentFile", name=model.header.document_file)
    w.close("TranscriptHeader")
    w.open("ConceptualModel")
    g = model.assumptions
    w.open("GlobalAssumptions")
    w.empty("EmptySpaceAssumption", value=_bool(g.empty_space))
    w.empty("PermanentAttachmentsAssumption", value=_bool(g.permanent_attachments))
    w.empty("PerpetuationAssumption", value=_bool(g.perpetuation))
    w.close("GlobalAssumptions")
    for ctx in model.contexts:
        w.open("LocalContext", contextId=ctx.identifier)
        w.text("MoodAndTense", ctx.mood)
        w.open("StructuralParent", name=ctx.sp_class)
        w.empty("Timeline", name=ctx.timeline)
        for t in ctx.times():
            w.open("TimelineTimePoint", value=_render(t))
            _emit_structure(w, ctx.points[t].structure)
            w.close("TimelineTimePoint")
        w.close("StructuralParent")
        w.close("LocalContext")
    w.close("ConceptualModel")
    w.close("InstanceModel")
    return "\n".join(w.lines) + "\n"


# parsing


def _root(text: str) -> ET.Element:
    try:
        return ET.fromstring(text.encode("utf-8") if isinstance(text, str) else text)
    except ET.ParseError as e:
        raise XmlFormatError(f"malformed instance model: {e}") from None


def _one(parent: ET.Element, tag: str, required: bool = True) -> ET.Element | None:
    found = parent.findall(tag)
    if len(found) > 1:
        raise XmlFormatError(f"<{parent.tag}> has more than one <{tag}>")
    if not found:
        if required:
            raise XmlFormatError(f"<{parent.tag}> lacks <{tag}>")
        return None
    return found[0]


def _need(e: ET.Element, name: str) -> str:
    v = e.get(name)
    if v is None:
        raise XmlFormatError(f"<{e.tag}> lacks attribute {name}")
    return v


def _flag(e: ET.Element) -> bool:
    v = _need(e, "value")
    if v not in ("true", "false"):
        raise XmlFormatError(f"<{e.tag}> value must be true or false, not {v!r}")
    return v == "true"


def _split(text: str | None) -> tuple[str, str]:
    body = " ".join((text or "").split())
    name, sep, value = body.partition(" = ")
    if not sep or not name or not value:
        raise XmlFormatError(f"attribute text {body!r} is not of the form 'Type = Value'")
    return name, value


def _typed(raw: str, vs):
    if raw == "nil":
        return NIL
    if vs.is_integer:
        try:
            return int(raw)
        except ValueError:
            pass
    elif vs.is_float:
        try:
            return float(raw)
        except ValueError:
            pass
    return raw


def _parse_attribute(info: Infopedia, cls: str, e: ET.Element) -> InstanceAttribute:
    name, raw = _split(e.text)
    try:
        t = info.attribute_type_for(cls, name)
    except LookupFailure as err:
        raise XmlFormatError(str(err)) from None
    value = _typed(raw, t.value_set)
    if not t.value_set.contains(value):
        raise MembershipError(f"{raw!r} is not a member of {t.qualified} ({t.value_set.name})")
    prob = e.get("probability")
    return InstanceAttribute(t.qualified, value, e.get("negated") == "true",
                             None if prob is None else float(prob))


def _parse_component(info: Infopedia, ctx: Context, e: ET.Element) -> ObjectInstance:
    cls = _need(e, "class")
    if cls not in info.object_frame_classes:
        raise XmlFormatError(f"unknown object frame class {cls}")
    ident = _need(e, "instance")
    content = tuple((e.get("content") or "").split())
    inst = ObjectInstance(cls, ident, content, e.get("multiple") == "true",
                          behaviors=tuple(d.behavior for d in info.view(cls).behaviors))
    ctx.note_identifier(cls, ident)
    rel = _one(e, "RelationshipToParent", required=False)
    if rel is not None:
        for a in rel.findall("Attribute"):
            name, raw = _split(a.text)
            t = info.attribute_type_for(cls, name)
            value = _typed(raw, t.value_set)
            if not t.value_set.contains(value):
                raise MembershipError(f"{raw!r} is not a member of {t.qualified} ({t.value_set.name})")
            inst.relationship[t.qualified] = value
    attrs = _one(e, "Attributes", required=False)
    for a in attrs.findall("Attribute") if attrs is not None else ():
        ia = _parse_attribute(info, cls, a)
        if ia.type in inst.attributes:
            raise XmlFormatError(f"{ident}: attribute {ia.type} appears twice")
        inst.attributes[ia.type] = ia
    inst.structure = _parse_structure(info, ctx, _one(e, "InstanceStructure", required=False))
    return inst


def _parse_structure(info: Infopedia, ctx: Context, e: ET.Element | None) -> list[ObjectInstance]:
    if e is None:
        return []
    return [_parse_component(info, ctx, c) for c in e.findall("Component")]


def _parse_context(info: Infopedia, e: ET.Element) -> Context:
    ident = _need(e, "contextId")
    mood = " ".join((_one(e, "MoodAndTense").text or "").split())
    sp = _one(e, "StructuralParent")
    sp_class = _need(sp, "name")
    if sp_class not in info.object_frame_classes:
        raise XmlFormatError(f"unknown structural parent class {sp_class}")
    ds, temporal = info.temporal_system(sp_class)
    timeline = _need(_one(sp, "Timeline"), "name")
    ctx = Context(ident, mood, sp_class, timeline, temporal.value_set, e.get("leadingClass"))
    vs = temporal.value_set
    previous = None
    for p in sp.findall("TimelineTimePoint"):
        t = _typed(_need(p, "value"), vs)
        if not vs.contains(t) or t is NIL:
            raise MembershipError(f"time point {t!r} is not a member of {vs.name}")
        if previous is not None and vs.index(t) <= vs.index(previous):
            raise XmlFormatError(f"time point {t!r} is out of order")
        root = ObjectInstance(sp_class, f"{sp_class}-1")
        root.structure = _parse_structure(info, ctx, _one(p, "InstanceStructure", required=False))
        ctx.points[t] = root
        previous = t
    ctx.last_time = previous
    return ctx


def parse_instance_model(text: str, info: Infopedia) -> InstanceModel:
    root = _root(text)
    if root.tag != "InstanceModel":
        raise XmlFormatError(f"root element is <{root.tag}>, expected <InstanceModel>")
    th = _one(root, "TranscriptHeader")
    doc = _one(th, "DocumentFile", required=False)
    header = TranscriptHeader(_need(_one(th, "TextSource"), "value"),
                              None if doc is None else _need(doc, "name"))
    cm = _one(root, "ConceptualModel")
    ga = _one(cm, "GlobalAssumptions", required=False)
    assumptions = GlobalAssumptions()
    if ga is not None:
        assumptions = GlobalAssumptions(_flag(_one(ga, "EmptySpaceAssumption")),
                                        _flag(_one(ga, "PermanentAttachmentsAssumption")),
                                        _flag(_one(ga, "PerpetuationAssumption")))
    contexts = [_parse_context(info, c) for c in cm.findall("LocalContext")]
    if len({c.identifier for c in contexts}) != len(contexts):
        raise XmlFormatError("context identifiers are not unique")
    return InstanceModel(header, assumptions, contexts)


# comparison


@dataclass(frozen=True)
class Comparison:
    equal: bool
    path: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.equal

    def __str__(self) -> str:
        return "equal" if self.equal else f"differs at {self.path}: {self.detail}"


def _norm_text(t: str | None) -> str:
    return " ".join((t or "").split())


def _diff(a: ET.Element, b: ET.Element, path: str) -> Comparison | None:
    if a.tag != b.tag:
        return Comparison(False, path, f"element <{a.tag}> vs <{b.tag}>")
    if a.attrib != b.attrib:
        for k in sorted(set(a.attrib) | set(b.attrib)):
            if a.get(k) != b.get(k):
                return Comparison(False, path, f"attribute {k}: {a.get(k)!r} vs {b.get(k)!r}")
    if _norm_text(a.text) != _norm_text(b.text):
        return Comparison(False, path, f"text {_norm_text(a.text)!r} vs {_norm_text(b.text)!r}")
    ka, kb = list(a), list(b)
    counts: dict[str, int] = {}
    for ca, cb in zip(ka, kb):
        counts[ca.tag] = counts.get(ca.tag, 0) + 1
        found = _diff(ca, cb, f"{path}/{ca.tag}[{counts[ca.tag]}]")
        if found is not None:
            return found
    if len(ka) != len(kb):
        extra = (ka if len(ka) > len(kb) else kb)[min(len(ka), len(kb))]
        return Comparison(False, path, f"child count {len(ka)} vs {len(kb)} (first unmatched <{extra.tag}>)")
    return None


def compare_normalized(a: str, b: str) -> Comparison:
    """Structural comparison ignoring whitespace, attribute order and comments."""
    ra, rb = _root(a), _root(b)
    found = _diff(ra, rb, f"/{ra.tag}")
    return Comparison(True) if found is None else found
