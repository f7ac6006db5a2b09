"""Scenario files: the sources, seed instances and verb query for one forward inference run."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from pathlib import Path

from ross.errors import ScenarioError
from ross.facts import DEFAULT_MOOD
from ross.infopedia import ACTEE, ACTOR, EXTRA

ROLES = (ACTOR, ACTEE, EXTRA)
DEFAULT_MAX_DEPTH = 4


@dataclass(frozen=True)
class Seed:
    cls: str
    identifier: str | None = None
    role: str | None = None
    content: tuple[str, ...] = ()
    multiple: bool = False
    attributes: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class Query:
    verb: str
    prior: str | None = None
    modifiers: tuple[str, ...] = ()
    actor_class: str | None = None
    actee_class: str | None = None
    extra_class: str | None = None


@dataclass(frozen=True)
class Scenario:
    sources: tuple[Path, ...]
    include: tuple[Path, ...]
    seeds: tuple[Seed, ...]
    query: Query
    text_source: str = "SubmittedFromWebClient"
    document_file: str | None = None
    context_id: str = "1"
    mood: str = DEFAULT_MOOD
    max_depth: int = DEFAULT_MAX_DEPTH
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.seeds:
            raise ScenarioError("a scenario needs at least one seed instance")
        if not self.query.verb.strip():
            raise ScenarioError("the query verb is empty")
        if self.max_depth < 0:
            raise ScenarioError("maxDepth must not be negative")

    @property
    def actor_seed(self) -> Seed:
        """The seed declared in the actor role, else the first seed."""
        return next((s for s in self.seeds if s.role == ACTOR), self.seeds[0])


def _bool(v: str | None, what: str) -> bool:
    if v in (None, "", "false"):
        return False
    if v == "true":
        return True
    raise ScenarioError(f"{what} must be true or false, not {v!r}")


def _paths(base: Path, raw: str | None) -> list[Path]:
    return [(base / p.strip()).resolve() for p in (raw or "").split(";") if p.strip()]


def parse_scenario(text: str, base_dir: str | Path = ".") -> Scenario:
    """Read a ``<Scenario>`` document; relative paths resolve against ``base_dir``."""
    base = Path(base_dir)
    try:
        root = ET.fromstring(text)
    except ET.ParseError as e:
        raise ScenarioError(f"malformed scenario: {e}") from None
    if root.tag != "Scenario":
        raise ScenarioError(f"root element is <{root.tag}>, expected <Scenario>")
    src = root.find("Sources")
    if src is None:
        raise ScenarioError("scenario lacks <Sources>")
    include = _paths(base, src.get("include"))
    sources = []
    for s in src.findall("Source"):
        if not s.get("file"):
            raise ScenarioError("<Source> lacks file")
        sources += _paths(base, s.get("file"))
    if not sources:
        raise ScenarioError("<Sources> names no source file")
    seeds = []
    for s in root.findall("Seed"):
        cls = s.get("class")
        if not cls:
            raise ScenarioError("<Seed> lacks class")
        role = s.get("role") or None
        if role == "none":
            role = None
        if role is not None and role not in ROLES:
            raise ScenarioError(f"seed role must be actor, actee, extra or none, not {role!r}")
        attrs = []
        for a in s.findall("Attribute"):
            if a.get("type") is None or a.get("value") is None:
                raise ScenarioError(f"seed {cls}: <Attribute> needs type and value")
            attrs.append((a.get("type"), a.get("value")))
        seeds.append(Seed(cls, s.get("id") or None, role, tuple((s.get("content") or "").split()),
                          _bool(s.get("multiple"), "multiple"), tuple(attrs)))
    q = root.find("Query")
    if q is None:
        raise ScenarioError("scenario lacks <Query>")
    query = Query(q.get("verb") or "", q.get("prior") or None, tuple((q.get("modifiers") or "").split()),
                  q.get("actorClass") or None, q.get("acteeClass") or None, q.get("extraClass") or None)
    header = root.find("Header")
    ctx = root.find("Context")
    try:
        depth = int(root.get("maxDepth", DEFAULT_MAX_DEPTH))
    except ValueError:
        raise ScenarioError(f"maxDepth must be an integer, not {root.get('maxDepth')!r}") from None
    return Scenario(
        tuple(sources), tuple(include), tuple(seeds), query,
        text_source=(header.get("textSource") if header is not None else None) or "SubmittedFromWebClient",
        document_file=header.get("documentFile") if header is not None else None,
        context_id=(ctx.get("id") if ctx is not None else None) or "1",
        mood=(ctx.get("mood") if ctx is not None else None) or DEFAULT_MOOD,
        max_depth=depth,
        name=root.get("name", ""),
    )


def load_scenario(path: str | Path) -> Scenario:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioError(f"cannot read scenario {p}: {e}") from None
    return parse_scenario(text, p.parent)
