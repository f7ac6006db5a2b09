"""Typed value sets, expression evaluation, mappings and transforms."""

from ross.values.evaluate import Environment, evaluate, variables
from ross.values.mapping import Mapping, Transform, apply_mapping, apply_transform, integerize
from ross.values.routine import run_routine
from ross.values.valueset import (
    IDENTITY_SET,
    LOCATIONAL,
    NON_SPACE_VALUE,
    QUALITATIVE,
    SPACE_VALUE,
    Value,
    ValueSet,
    check_membership,
    successor,
)

__all__ = [
    "Environment",
    "evaluate",
    "variables",
    "Mapping",
    "Transform",
    "apply_mapping",
    "apply_transform",
    "integerize",
    "run_routine",
    "IDENTITY_SET",
    "LOCATIONAL",
    "NON_SPACE_VALUE",
    "QUALITATIVE",
    "SPACE_VALUE",
    "Value",
    "ValueSet",
    "check_membership",
    "successor",
]
