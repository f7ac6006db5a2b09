"""Compiled knowledge base: definition indexes, inheritance, lexicon and queries."""

from ross.infopedia.compiler import Compiler, check, compile_files, compile_statements
from ross.infopedia.hierarchy import ancestor_order, associate_behaviors, find_cycles, flatten_inheritance
from ross.infopedia.lexicon import lexicon_lookup
from ross.infopedia.model import (
    ACTEE,
    ACTOR,
    EXTRA,
    IDENTITY_TYPE_NAME,
    AttributeSetting,
    AttributeType,
    BehaviorClass,
    ClassView,
    Designator,
    Diagnostic,
    DimensionSystem,
    Infopedia,
    LexEntry,
    ObjectFrameClass,
    PopulatedNode,
    ReferenceNode,
)
from ross.infopedia.queries import FORMS, find_behavior_classes, verb_form

__all__ = [
    "ACTEE",
    "ACTOR",
    "EXTRA",
    "FORMS",
    "IDENTITY_TYPE_NAME",
    "AttributeSetting",
    "AttributeType",
    "BehaviorClass",
    "ClassView",
    "Compiler",
    "Designator",
    "Diagnostic",
    "DimensionSystem",
    "Infopedia",
    "LexEntry",
    "ObjectFrameClass",
    "PopulatedNode",
    "ReferenceNode",
    "ancestor_order",
    "associate_behaviors",
    "check",
    "compile_files",
    "compile_statements",
    "find_behavior_classes",
    "find_cycles",
    "flatten_inheritance",
    "lexicon_lookup",
    "verb_form",
]
