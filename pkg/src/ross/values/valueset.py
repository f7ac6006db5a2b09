"""Compiled value sets, membership checks and ordinal stepping."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ross.errors import MembershipError, OrderingError, OutOfRange
from ross.syntax.ast import NIL, DictionarySection

Raw = Union[int, float, str, type(NIL)]

SPACE_VALUE = "SpaceValue"
NON_SPACE_VALUE = "NonSpaceValue"

LOCATIONAL = "Locational"
QUALITATIVE = "Qualitative"


@dataclass(frozen=True)
class Value:
    """A raw value checked against a set, with its value category."""

    raw: Raw
    set_name: str
    category: str | None = None


@dataclass(frozen=True, eq=False)
class ValueSet:
    """A finite or constant-class set of attribute values.

    ``kind`` is one of ``constant`` (a constant-set name such as
    IntegerConstant), ``range`` (inclusive integer bounds), ``enum`` (an
    ordered tuple of strings) or ``identity`` (opaque instance identifiers).
    """

    name: str
    kind: str
    usage: str | None = None
    ordered: bool = False
    base: str | None = None
    constant: str | None = None
    lower: int | None = None
    upper: int | None = None
    members: tuple[str, ...] = ()
    dictionaries: dict[str, tuple[DictionarySection, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "enum":
            object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.members)})

    def __repr__(self) -> str:
        return f"ValueSet({self.name!r}, {self.kind})"

    @property
    def is_numeric(self) -> bool:
        if self.kind == "range":
            return True
        return self.kind == "constant" and self.constant in ("IntegerConstant", "FloatingPointConstant")

    @property
    def is_integer(self) -> bool:
        return self.kind == "range" or (self.kind == "constant" and self.constant == "IntegerConstant")

    @property
    def is_float(self) -> bool:
        return self.kind == "constant" and self.constant == "FloatingPointConstant"

    def contains(self, v: Raw) -> bool:
        if v is NIL:
            return True
        if self.kind == "enum":
            return isinstance(v, str) and v in self._index
        if self.kind == "identity":
            return isinstance(v, str) and v != ""
        if self.kind == "range":
            return _is_int(v) and self.lower <= v <= self.upper
        if self.constant == "IntegerConstant":
            return _is_int(v)
        if self.constant == "FloatingPointConstant":
            return _is_int(v) or isinstance(v, float)
        return isinstance(v, str)

    def enumerate(self) -> list[Raw]:
        """All members of a finite set, in order."""
        if self.kind == "enum":
            return list(self.members)
        if self.kind == "range":
            return list(range(self.lower, self.upper + 1))
        raise OrderingError(f"value set {self.name} is not finite")

    def size(self) -> int:
        if self.kind == "enum":
            return len(self.members)
        if self.kind == "range":
            return self.upper - self.lower + 1
        raise OrderingError(f"value set {self.name} is not finite")

    def first(self) -> Raw:
        if self.kind == "enum" and self.members:
            return self.members[0]
        if self.kind == "range":
            return self.lower
        raise OrderingError(f"value set {self.name} has no first member")

    def index(self, v: Raw) -> int:
        if self.kind == "enum":
            if not isinstance(v, str) or v not in self._index:
                raise MembershipError(f"{v!r} is not a member of value set {self.name}")
            return self._index[v]
        if self.kind == "range":
            if not self.contains(v) or v is NIL:
                raise MembershipError(f"{v!r} is not a member of value set {self.name}")
            return v - self.lower
        raise OrderingError(f"value set {self.name} has no member order")

    def member_at(self, i: int) -> Raw:
        if not 0 <= i < self.size():
            raise OutOfRange(f"position {i} is outside value set {self.name}")
        return self.members[i] if self.kind == "enum" else self.lower + i

    def shift(self, v: Raw, k: int, implicit: bool = True) -> Raw:
        """Ordinal step of ``k`` positions.

        Unordered enumerated sets step by declaration index when ``implicit``
        is set; otherwise they refuse.
        """
        if self.kind == "enum" and not self.ordered and not implicit:
            raise OrderingError(f"value set {self.name} is not ordered")
        i = self.index(v) + k
        if not 0 <= i < self.size():
            raise OutOfRange(f"{v!r} {'+' if k >= 0 else '-'} {abs(k)} leaves value set {self.name}")
        return self.member_at(i)

    def compare_key(self, v: Raw) -> int | float:
        """Sort key for relational comparison; requires an ordered set for strings."""
        if self.kind == "enum":
            if not self.ordered:
                raise OrderingError(f"value set {self.name} is not ordered; only == and != apply")
            return self.index(v)
        if _is_int(v) or isinstance(v, float):
            return v
        raise OrderingError(f"value set {self.name} has no member order")

    def dictionary_for(self, value: str) -> tuple[DictionarySection, ...]:
        return self.dictionaries.get(value, ())


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def category_of(v: Raw, vs: ValueSet) -> str | None:
    if v is NIL:
        return None
    if vs.usage == LOCATIONAL:
        return None
    return SPACE_VALUE if v == "Space" else NON_SPACE_VALUE


def check_membership(raw: Raw, vs: ValueSet) -> Value:
    """Check ``raw`` against ``vs`` and tag it with its value category."""
    if not vs.contains(raw):
        raise MembershipError(f"{raw!r} is not a member of value set {vs.name}")
    return Value(raw, vs.name, category_of(raw, vs))


def successor(v: Raw, vs: ValueSet, k: int = 1) -> Raw:
    """The member ``k`` positions after ``v`` in an ordered set."""
    if vs.kind == "enum" and not vs.ordered:
        raise OrderingError(f"value set {vs.name} is not ordered")
    return vs.shift(v, k, implicit=False)


IDENTITY_SET = ValueSet("UniqueIdentity", "identity", usage=QUALITATIVE)
