"""Syntax tree for Star compilation units.

Every optional XML-element flag of a construct is an explicit field; ``None``
means the flag was absent. Sections distinguish "absent" (``None``) from
"present but empty" (``()``). Source positions never take part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ross.errors import Position


class _Nil:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NIL"

    def __reduce__(self):
        return (_Nil, ())


NIL = _Nil()


@dataclass(frozen=True)
class Node:
    pos: Position | None = field(default=None, compare=False, repr=False, kw_only=True)


# expressions

@dataclass(frozen=True)
class Const(Node):
    value: int | float | str


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Compare(Node):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Paren(Node):
    inner: Expr


Expr = Union[Const, Var, BinOp, Compare, Paren]

ARITH_OPS = ("+", "-", "*", "/")
COMPARE_OPS = ("<", ">", "<=", ">=", "==", "!=")


# shared pieces

Bound = Union[int, str]


@dataclass(frozen=True)
class ValueRange(Node):
    lower: Bound
    upper: Bound


@dataclass(frozen=True)
class AttributeBase(Node):
    """``<Attribute ref = T val|range|var|expr|routine|bitmap = ... />``."""

    ref: str
    kind: str
    value: object


ATTRIBUTE_VALUE_KINDS = ("val", "range", "var", "expr", "routine", "bitmap")


@dataclass(frozen=True)
class DictionarySection(Node):
    kind: str
    language: str
    words: tuple[str, ...]
    noun: bool | None = None


DICTIONARY_KINDS = (
    "DictionaryAntePriorWord",
    "DictionaryPriorWord",
    "Dictionary",
    "DictionaryModifyingVerbs",
    "DictionaryAdverbs",
)


# declarations

@dataclass(frozen=True)
class IntegerDecl(Node):
    name: str
    value: int


@dataclass(frozen=True)
class FloatDecl(Node):
    name: str
    value: float


@dataclass(frozen=True)
class StringDecl(Node):
    name: str
    value: str


# value sets

@dataclass(frozen=True)
class ConstantSetName(Node):
    name: str


@dataclass(frozen=True)
class RenameSet(Node):
    target: str


@dataclass(frozen=True)
class RangeContent(Node):
    range: ValueRange


@dataclass(frozen=True)
class EnumEntry(Node):
    value: str
    dictionaries: tuple[DictionarySection, ...] = ()


@dataclass(frozen=True)
class EnumContent(Node):
    entries: tuple[EnumEntry, ...]


CONSTANT_SET_NAMES = ("IntegerConstant", "FloatingPointConstant", "StringLiteral")

SetContent = Union[ConstantSetName, RenameSet, RangeContent, EnumContent]


@dataclass(frozen=True)
class ValueSetStmt(Node):
    name: str
    content: SetContent
    base: str | None = None
    usage: str | None = None
    ordered: bool | None = None


@dataclass(frozen=True)
class MappingStmt(Node):
    name: str
    source: str
    dest: str
    function: Expr


# routines

@dataclass(frozen=True)
class Param(Node):
    type: str
    name: str
    length: int | None = None


@dataclass(frozen=True)
class Local(Node):
    name: str
    initial: int


@dataclass(frozen=True)
class StrEquals(Node):
    name: str
    literal: str


@dataclass(frozen=True)
class IfChain(Node):
    branches: tuple[tuple[StrEquals, tuple], ...]
    otherwise: tuple | None = None


@dataclass(frozen=True)
class ArrayAssign(Node):
    array: str
    index: int | str
    value: int


@dataclass(frozen=True)
class ReturnStmt(Node):
    value: bool


@dataclass(frozen=True)
class RoutineBody(Node):
    params: tuple[Param, ...]
    locals: tuple[Local, ...]
    body: tuple


@dataclass(frozen=True)
class TransformStmt(Node):
    name: str
    source: str
    dest: str
    routine: RoutineBody


# attribute types, attributes, dimension and specification systems

@dataclass(frozen=True)
class AttributeTypeStmt(Node):
    name: str
    super_type: str | None = None
    state: bool | None = None
    optional_causal: bool | None = None
    probability: Expr | None = None
    value_set_ref: str | None = None
    value_set: ValueSetStmt | None = None


@dataclass(frozen=True)
class AttributeTypeRef(Node):
    """A bare attribute type name listed as a dimension-system member."""

    name: str


@dataclass(frozen=True)
class AttributeTypeAlias(Node):
    """``"Alias" (Target);`` inside a member list."""

    name: str
    target: str


@dataclass(frozen=True)
class AttributeStmt(Node):
    name: str
    base: AttributeBase
    probability: Expr | None = None


@dataclass(frozen=True)
class DimensionSystemStmt(Node):
    name: str
    role_trait: str | None = None
    rename: str | None = None
    merge: tuple[str, ...] | None = None
    spatial: tuple | None = None
    temporal: tuple | None = None


@dataclass(frozen=True)
class SpecificationSystemStmt(Node):
    name: str
    dimension_system: DimensionSystemStmt
    quality_types: tuple = ()


# object frame classes

@dataclass(frozen=True)
class AnchorPoint(Node):
    type: str
    val: str


@dataclass(frozen=True)
class DimensionSet(Node):
    kind: str
    dimension_system: str
    attributes: tuple[AttributeBase, ...] = ()
    dimension_system_type: str | None = None
    anchor: AnchorPoint | None = None


@dataclass(frozen=True)
class RelationshipToParent(Node):
    at_locations: tuple[DimensionSet, ...] | None = None
    orientation: tuple | None = None
    extents: tuple[DimensionSet, ...] | None = None


@dataclass(frozen=True)
class BehaviorDesignator(Node):
    name: str
    probability: Expr | None = None


@dataclass(frozen=True)
class ObjectFrameClassStmt(Node):
    name: str
    sealed: bool | None = None
    probability_in_parent: Expr | None = None
    structure_trait: str | None = None
    multiple: bool | None = None
    structural_parent: bool | None = None
    mass_substance: bool | None = None
    cardinality: object = None
    dictionaries: tuple[DictionarySection, ...] = ()
    higher_classes: tuple[str, ...] | None = None
    sp_bases: tuple[str, ...] | None = None
    relationship: RelationshipToParent | None = None
    attribute_types: tuple[AttributeTypeStmt, ...] | None = None
    dimension_systems: tuple[DimensionSystemStmt, ...] | None = None
    spec_systems: tuple[SpecificationSystemStmt, ...] | None = None
    relationship_types: tuple | None = None
    attributes: tuple[AttributeStmt, ...] | None = None
    composition: tuple | None = None
    relationships: tuple | None = None
    structure: tuple[ObjectFrameClassStmt, ...] | None = None
    behaviors_potential: tuple[BehaviorDesignator, ...] | None = None
    behaviors_actual: tuple[BehaviorDesignator, ...] | None = None


@dataclass(frozen=True)
class TemplateClassStmt(Node):
    name: str
    sp_ref: str | None = None
    ofc_ref: str | None = None
    shape_template: bool | None = None
    dimension_system: str | None = None
    spec_system: str | None = None
    attributes: tuple[AttributeBase, ...] = ()
    extents: DimensionSet | None = None


@dataclass(frozen=True)
class PopulatedObjectClassStmt(Node):
    name: str
    ofc_ref: str | None = None
    sp_ref: str | None = None
    binder_source: bool | None = None
    passive: bool | None = None
    extra: bool | None = None
    multiple: bool | None = None
    probability: Expr | None = None
    dimension_system: str | None = None
    spec_system: str | None = None
    attributes: tuple[AttributeBase, ...] = ()


# behavior classes

@dataclass(frozen=True)
class ParameterRef(Node):
    class_ref: str
    expr: Expr | None = None


@dataclass(frozen=True)
class BehaviorReference(Node):
    behavior: str
    probability: Expr | None = None
    actor: ParameterRef | None = None
    actee: ParameterRef | None = None
    extra: ParameterRef | None = None


@dataclass(frozen=True)
class BehaviorClassStmt(Node):
    name: str
    bridge: str | None = None
    sealed: bool | None = None
    causal_rule: bool | None = None
    direction: str | None = None
    negation: bool | None = None
    dictionaries: tuple[DictionarySection, ...] = ()
    modification: tuple[DictionarySection, ...] | None = None
    higher_classes: tuple[str, ...] | None = None
    prior: tuple = ()
    post: tuple = ()


Statement = Union[
    IntegerDecl,
    FloatDecl,
    StringDecl,
    ValueSetStmt,
    MappingStmt,
    TransformStmt,
    AttributeTypeStmt,
    AttributeStmt,
    DimensionSystemStmt,
    SpecificationSystemStmt,
    ObjectFrameClassStmt,
    TemplateClassStmt,
    PopulatedObjectClassStmt,
    BehaviorClassStmt,
]
