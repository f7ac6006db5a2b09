"""Instance models: contexts, timelines of structural parent instances and object instances."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Iterator

from ross.errors import UnknownInstance
from ross.values import ValueSet

CAUSE, EFFECT, UNSPECIFIED = "cause", "effect", "unspecified"


@dataclass
class InstanceAttribute:
    """One populated attribute; ``type`` is the qualified attribute type name."""

    type: str
    value: object
    negated: bool = False
    probability: float | None = None


@dataclass
class ObjectInstance:
    cls: str
    identifier: str
    content: tuple[str, ...] = ()
    multiple: bool = False
    causality: str = field(default=UNSPECIFIED, compare=False)
    relationship: dict[str, object] = field(default_factory=dict)
    attributes: dict[str, InstanceAttribute] = field(default_factory=dict)
    structure: list[ObjectInstance] = field(default_factory=list)
    behaviors: tuple[str, ...] = field(default=(), compare=False)
    # bridge-relative placement written by behavior classes; scratch, never serialized
    placement: dict[str, object] = field(default_factory=dict, compare=False)

    def walk(self) -> Iterator[ObjectInstance]:
        """Every descendant, depth first, in attachment order (self excluded)."""
        for child in self.structure:
            yield child
            yield from child.walk()

    def find(self, identifier: str) -> ObjectInstance | None:
        for inst in self.walk():
            if inst.identifier == identifier:
                return inst
        return None

    def get(self, type_name: str) -> InstanceAttribute | None:
        return self.attributes.get(type_name)

    def value(self, type_name: str):
        a = self.attributes.get(type_name)
        return None if a is None else a.value

    def clone(self) -> ObjectInstance:
        return copy.deepcopy(self)

    def __repr__(self) -> str:
        return f"ObjectInstance({self.cls}.{self.identifier})"


@dataclass
class GlobalAssumptions:
    empty_space: bool = True
    permanent_attachments: bool = True
    perpetuation: bool = True


@dataclass
class TranscriptHeader:
    text_source: str = "SubmittedFromWebClient"
    document_file: str | None = None


@dataclass
class Context:
    identifier: str
    mood: str
    sp_class: str
    timeline: str
    time_set: ValueSet = field(compare=False, repr=False)
    leading_class: str | None = field(default=None, compare=False)
    last_time: object = field(default=None, compare=False)
    points: dict[object, ObjectInstance] = field(default_factory=dict)
    counters: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def times(self) -> list:
        """Occupied time points in value-set order."""
        return sorted(self.points, key=self.time_set.index)

    def at(self, time) -> ObjectInstance:
        try:
            return self.points[time]
        except KeyError:
            raise UnknownInstance(f"context {self.identifier} has no time point {time!r}") from None

    def next_identifier(self, cls: str) -> str:
        n = self.counters.get(cls, 0) + 1
        self.counters[cls] = n
        return f"{cls}-{n}"

    def note_identifier(self, cls: str, identifier: str) -> None:
        """Keep the per-class counter ahead of explicitly supplied ``Class-n`` identifiers."""
        prefix = f"{cls}-"
        if identifier.startswith(prefix) and identifier[len(prefix):].isdigit():
            self.counters[cls] = max(self.counters.get(cls, 0), int(identifier[len(prefix):]))


@dataclass
class InstanceModel:
    header: TranscriptHeader = field(default_factory=TranscriptHeader)
    assumptions: GlobalAssumptions = field(default_factory=GlobalAssumptions)
    contexts: list[Context] = field(default_factory=list)

    def context(self, identifier: str) -> Context:
        for c in self.contexts:
            if c.identifier == identifier:
                return c
        raise UnknownInstance(f"no context {identifier!r}")
