"""Compiled definitions held by an Infopedia."""

from __future__ import annotations

from dataclasses import dataclass, field

from ross.errors import LookupFailure, Position
from ross.syntax import ast
from ross.values import IDENTITY_SET, Mapping, Transform, ValueSet

IDENTITY_TYPE_NAME = "UniqueIdentityAttributeType"

ACTOR, ACTEE, EXTRA = "actor", "actee", "extra"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    pos: Position | None
    kind: str
    message: str

    def __str__(self) -> str:
        where = str(self.pos) if self.pos else "-"
        return f"{self.severity} {where} {self.kind} {self.message}"


@dataclass(eq=False)
class AttributeType:
    name: str
    qualified: str
    owner: str | None
    super_type: str
    value_set: ValueSet
    state: bool = False
    optional_causal: bool = False
    probability: float | None = None
    alias_of: str | None = None
    pos: Position | None = None

    @property
    def is_locational(self) -> bool:
        return self.super_type == "Locational"

    @property
    def is_identity(self) -> bool:
        return self.name == IDENTITY_TYPE_NAME and self.owner is None

    def __repr__(self) -> str:
        return f"AttributeType({self.qualified!r})"


UNIQUE_IDENTITY = AttributeType(
    IDENTITY_TYPE_NAME, IDENTITY_TYPE_NAME, None, "Qualitative", IDENTITY_SET
)


@dataclass(eq=False)
class DimensionSystem:
    name: str
    qualified: str
    owner: str | None
    spatial: tuple[AttributeType, ...] = ()
    temporal: tuple[AttributeType, ...] = ()
    role_trait: str | None = None
    pos: Position | None = None

    @property
    def types(self) -> tuple[AttributeType, ...]:
        return self.spatial + self.temporal

    def find(self, name: str) -> AttributeType | None:
        for t in self.types:
            if t.name == name or t.qualified == name:
                return t
        return None

    def __repr__(self) -> str:
        return f"DimensionSystem({self.qualified!r})"


@dataclass(eq=False)
class SpecificationSystem:
    name: str
    qualified: str
    owner: str | None
    dimension_system: DimensionSystem
    quality_types: tuple[AttributeType, ...] = ()
    pos: Position | None = None


@dataclass(frozen=True)
class AttributeSetting:
    """One ``<Attribute ref = ... />`` resolved against its type."""

    type: AttributeType
    kind: str
    value: object
    probability: float | None = None


@dataclass(frozen=True)
class LocationSet:
    """An at-location or outer-extent set of a relationship to parent."""

    kind: str
    dimension_system: DimensionSystem
    settings: tuple[AttributeSetting, ...] = ()


@dataclass(frozen=True)
class Designator:
    behavior: str
    probability: float | None = None
    source: str = "auto"


@dataclass(eq=False)
class ObjectFrameClass:
    name: str
    sealed: bool = False
    structure_trait: str | None = None
    multiple: bool = False
    structural_parent: bool = False
    mass_substance: bool = False
    probability_in_parent: float | None = None
    cardinality: object = None
    dictionaries: tuple[ast.DictionarySection, ...] = ()
    higher_classes: tuple[str, ...] = ()
    sp_bases: tuple[str, ...] = ()
    at_locations: tuple[LocationSet, ...] = ()
    extents: tuple[LocationSet, ...] = ()
    attribute_types: dict[str, AttributeType] = field(default_factory=dict)
    dimension_systems: dict[str, DimensionSystem] = field(default_factory=dict)
    spec_systems: dict[str, SpecificationSystem] = field(default_factory=dict)
    attributes: tuple[AttributeSetting, ...] = ()
    structure: tuple[str, ...] = ()
    behaviors_potential: tuple[Designator, ...] = ()
    behaviors_actual: tuple[Designator, ...] = ()
    associated: list[Designator] = field(default_factory=list)
    parent: str | None = None
    pos: Position | None = None

    def __repr__(self) -> str:
        return f"ObjectFrameClass({self.name!r})"


@dataclass(frozen=True)
class ClassView:
    """Effective view of a class after flattening its inheritance."""

    name: str
    ancestors: tuple[str, ...]
    attribute_types: dict[str, AttributeType]
    attributes: tuple[AttributeSetting, ...]
    dimension_systems: dict[str, DimensionSystem]
    sp_bases: tuple[str, ...]
    structure: tuple[str, ...]
    behaviors: tuple[Designator, ...]


@dataclass(eq=False)
class PopulatedNode:
    name: str
    cls: str
    binder_source: bool = False
    passive: bool = False
    extra: bool = False
    multiple: bool = False
    probability: float | None = None
    dimension_system: DimensionSystem | None = None
    locational: tuple[AttributeSetting, ...] = ()
    qualitative: tuple[AttributeSetting, ...] = ()
    pos: Position | None = None

    @property
    def role(self) -> str:
        if self.passive:
            return ACTEE
        if self.extra:
            return EXTRA
        return ACTOR

    def __repr__(self) -> str:
        return f"PopulatedNode({self.name!r}, {self.cls!r})"


@dataclass(frozen=True)
class Parameter:
    cls: str
    expr: ast.Expr | None = None


@dataclass(eq=False)
class ReferenceNode:
    behavior: str
    probability: float | None = None
    actor: Parameter | None = None
    actee: Parameter | None = None
    extra: Parameter | None = None
    pos: Position | None = None

    def __repr__(self) -> str:
        return f"ReferenceNode({self.behavior!r})"


@dataclass(eq=False)
class BehaviorClass:
    name: str
    order: int
    bridge: str | None = None
    sealed: bool = False
    causal_rule: bool = False
    direction: str = "Unspecified"
    negation: bool = False
    dictionaries: tuple[ast.DictionarySection, ...] = ()
    modification: tuple[ast.DictionarySection, ...] = ()
    higher_classes: tuple[str, ...] = ()
    prior: tuple = ()
    post: tuple = ()
    pos: Position | None = None

    def populated(self, part: str | None = None) -> list[PopulatedNode]:
        nodes = {"prior": self.prior, "post": self.post}.get(part, self.prior + self.post)
        return [n for n in nodes if isinstance(n, PopulatedNode)]

    def role_class(self, role: str) -> str | None:
        """Class of the first node filling ``role``, antecedent first."""
        for n in self.populated():
            if n.role == role:
                return n.cls
        return None

    def __repr__(self) -> str:
        return f"BehaviorClass({self.name!r})"


@dataclass(eq=False)
class TemplateClass:
    name: str
    sp_ref: str | None = None
    ofc_ref: str | None = None
    shape_template: bool = False
    dimension_system: DimensionSystem | None = None
    spec_system: SpecificationSystem | None = None
    settings: tuple[AttributeSetting, ...] = ()
    pos: Position | None = None


@dataclass(frozen=True)
class LexEntry:
    word: str
    kind: str
    name: str
    role: str
    ordinal: int
    section: str
    language: str
    prior_word: str = ""
    ante_prior_word: str = ""
    owner: str | None = None
    value: str | None = None

    def __str__(self) -> str:
        target = f"{self.name}/{self.value}" if self.value is not None else self.name
        extra = f" prior={self.prior_word}" if self.prior_word else ""
        return f"{self.word}\t{self.role}\t{self.kind}\t{target}\tordinal={self.ordinal}{extra}"


INDEX_NAMES = (
    "integers",
    "floats",
    "strings",
    "value_sets",
    "mappings",
    "attribute_types",
    "relationship_types",
    "dimension_systems",
    "spec_systems",
    "object_frame_classes",
    "template_classes",
    "populated_classes",
    "behavior_classes",
)


@dataclass(eq=False)
class Infopedia:
    integers: dict[str, int] = field(default_factory=dict)
    floats: dict[str, float] = field(default_factory=dict)
    strings: dict[str, str] = field(default_factory=dict)
    value_sets: dict[str, ValueSet] = field(default_factory=dict)
    mappings: dict[str, Mapping] = field(default_factory=dict)
    attribute_types: dict[str, AttributeType] = field(default_factory=dict)
    relationship_types: dict[str, object] = field(default_factory=dict)
    dimension_systems: dict[str, DimensionSystem] = field(default_factory=dict)
    spec_systems: dict[str, SpecificationSystem] = field(default_factory=dict)
    object_frame_classes: dict[str, ObjectFrameClass] = field(default_factory=dict)
    template_classes: dict[str, TemplateClass] = field(default_factory=dict)
    populated_classes: dict[str, PopulatedNode] = field(default_factory=dict)
    behavior_classes: dict[str, list[BehaviorClass]] = field(default_factory=dict)
    transforms: dict[str, Transform] = field(default_factory=dict)
    lexicon: dict[str, list[LexEntry]] = field(default_factory=dict)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    _views: dict[str, ClassView] = field(default_factory=dict, repr=False)

    # lookups

    def ofc(self, name: str) -> ObjectFrameClass:
        try:
            return self.object_frame_classes[name]
        except KeyError:
            raise LookupFailure(f"unknown object frame class {name}") from None

    def behavior(self, name: str) -> BehaviorClass:
        found = self.behavior_classes.get(name)
        if not found:
            raise LookupFailure(f"unknown behavior class {name}")
        return found[0]

    @property
    def behaviors(self) -> list[BehaviorClass]:
        """Every behavior class in declaration order."""
        out = [b for group in self.behavior_classes.values() for b in group]
        return sorted(out, key=lambda b: b.order)

    def transform(self, name: str) -> Transform:
        try:
            return self.transforms[name]
        except KeyError:
            raise LookupFailure(f"unknown transform {name}") from None

    def mapping(self, name: str) -> Mapping:
        try:
            return self.mappings[name]
        except KeyError:
            raise LookupFailure(f"unknown mapping {name}") from None

    def view(self, name: str) -> ClassView:
        from ross.infopedia.hierarchy import flatten_inheritance

        if name not in self._views:
            self._views[name] = flatten_inheritance(self, name)
        return self._views[name]

    def ancestors(self, name: str) -> tuple[str, ...]:
        return self.view(name).ancestors

    def is_a(self, cls: str, other: str) -> bool:
        return cls == other or other in self.ancestors(cls)

    def compatible(self, a: str, b: str) -> bool:
        """is-a in either direction."""
        return self.is_a(a, b) or self.is_a(b, a)

    def attribute_type_for(self, cls: str | None, name: str) -> AttributeType:
        """Resolve an attribute type name as seen from class ``cls``."""
        if name in self.attribute_types and "." in name:
            return self.attribute_types[name]
        if cls is not None:
            v = self.view(cls)
            if name in v.attribute_types:
                return v.attribute_types[name]
            for ds in v.dimension_systems.values():
                t = ds.find(name)
                if t is not None:
                    return t
        if name in self.attribute_types:
            return self.attribute_types[name]
        if name == IDENTITY_TYPE_NAME:
            return UNIQUE_IDENTITY
        where = f" from {cls}" if cls else ""
        raise LookupFailure(f"attribute type {name} is not reachable{where}")

    def dimension_system_for(self, cls: str | None, name: str) -> DimensionSystem:
        if name in self.dimension_systems and "." in name:
            return self.dimension_systems[name]
        if cls is not None:
            v = self.view(cls)
            if name in v.dimension_systems:
                return v.dimension_systems[name]
        if name in self.dimension_systems:
            return self.dimension_systems[name]
        raise LookupFailure(f"unknown dimension system {name}")

    def temporal_system(self, sp_class: str) -> tuple[DimensionSystem, AttributeType]:
        """The first dimension system of a class that has a temporal attribute type."""
        v = self.view(sp_class)
        for ds in v.dimension_systems.values():
            if ds.temporal:
                return ds, ds.temporal[0]
        raise LookupFailure(f"class {sp_class} has no temporal dimension")

    def counts(self) -> dict[str, int]:
        out = {}
        for name in INDEX_NAMES:
            idx = getattr(self, name)
            out[name] = sum(len(v) for v in idx.values()) if name == "behavior_classes" else len(idx)
        out["transforms"] = len(self.transforms)
        return out
