"""Fact repository: instance models, contexts and population of object instances."""

from ross.facts.model import (
    CAUSE,
    EFFECT,
    UNSPECIFIED,
    Context,
    GlobalAssumptions,
    InstanceAttribute,
    InstanceModel,
    ObjectInstance,
    TranscriptHeader,
)
from ross.facts.operations import (
    DEFAULT_MOOD,
    attach,
    attribute_at,
    clone_structural_parent,
    conflicts,
    create_context,
    set_state_attribute,
)
from ross.facts.population import ANTECEDENT, CONSEQUENT, Match, apply_populated_object_class, candidates

__all__ = [
    "ANTECEDENT",
    "CAUSE",
    "CONSEQUENT",
    "DEFAULT_MOOD",
    "EFFECT",
    "UNSPECIFIED",
    "Context",
    "GlobalAssumptions",
    "InstanceAttribute",
    "InstanceModel",
    "Match",
    "ObjectInstance",
    "TranscriptHeader",
    "apply_populated_object_class",
    "attach",
    "attribute_at",
    "candidates",
    "clone_structural_parent",
    "conflicts",
    "create_context",
    "set_state_attribute",
]
