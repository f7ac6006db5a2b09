"""Lookup routines over a compiled Infopedia."""

from __future__ import annotations

from ross.infopedia.model import ACTEE, ACTOR, EXTRA, BehaviorClass, Infopedia
from ross.syntax import ast

FORMS = ("infinitive", "simple-past", "past-participle", "present-3ps", "present-participle")


def verb_form(section: ast.DictionarySection, word: str) -> set[str]:
    """Verb-form names at which ``word`` occurs; a verb list repeats in groups of five."""
    return {FORMS[i % 5] for i, w in enumerate(section.words) if w == word}


def verb_ordinals(b: BehaviorClass, word: str) -> list[tuple[str, int]]:
    """(language, position) of every occurrence of ``word`` in the class's Dictionary sections."""
    return [(s.language, i) for s in b.dictionaries if s.kind == "Dictionary"
            for i, w in enumerate(s.words) if w == word]


def _prior_ok(b: BehaviorClass, language: str, ordinal: int, prior: str | None) -> bool:
    for s in b.dictionaries:
        if s.kind == "DictionaryPriorWord" and s.language == language:
            required = s.words[ordinal].strip() if ordinal < len(s.words) else ""
            return required == "" or required == (prior or "")
    return True


def _modifiers_ok(b: BehaviorClass, modifiers: tuple[str, ...]) -> bool:
    for s in b.modification:
        if not set(s.words) & set(modifiers):
            return False
    return True


def find_behavior_classes(info: Infopedia, verb: str, actor: str | None = None, actee: str | None = None,
                          modifiers=(), prior: str | None = None, extra: str | None = None) -> list[BehaviorClass]:
    """Every behavior class the verb (with optional context) could denote, in declaration order."""
    out = []
    modifiers = tuple(modifiers)
    for b in info.behaviors:
        hits = verb_ordinals(b, verb)
        if not hits or not any(_prior_ok(b, lang, i, prior) for lang, i in hits):
            continue
        if not _modifiers_ok(b, modifiers):
            continue
        ok = True
        for role, supplied in ((ACTOR, actor), (ACTEE, actee), (EXTRA, extra)):
            if supplied is None:
                continue
            rule_cls = b.role_class(role)
            if rule_cls is None or not info.compatible(supplied, rule_cls):
                ok = False
                break
        if ok:
            out.append(b)
    return out
