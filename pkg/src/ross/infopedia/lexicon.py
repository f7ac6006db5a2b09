"""Lexicon: every dictionary word mapped back to the definitions that use it."""

from __future__ import annotations

from ross.infopedia.model import Infopedia, LexEntry
from ross.syntax import ast

CLASS_NOUN = "class-noun"
BEHAVIOR_VERB = "behavior-verb"
ATTRIBUTE_VALUE = "attribute-value"
MODIFIER = "modifier"


def _words_at(sections, kind: str, language: str) -> tuple[str, ...]:
    for s in sections:
        if s.kind == kind and s.language == language:
            return s.words
    return ()


def _entries_for(sections: tuple[ast.DictionarySection, ...], kind: str, name: str, main_role: str,
                 owner: str | None = None, value: str | None = None) -> list[LexEntry]:
    out = []
    for s in sections:
        role = main_role if s.kind == "Dictionary" else MODIFIER
        prior = _words_at(sections, "DictionaryPriorWord", s.language) if s.kind == "Dictionary" else ()
        ante = _words_at(sections, "DictionaryAntePriorWord", s.language) if s.kind == "Dictionary" else ()
        for i, w in enumerate(s.words):
            word = w.strip()
            if not word:
                continue
            out.append(LexEntry(
                word, kind, name, role, i, s.kind, s.language,
                prior_word=prior[i].strip() if i < len(prior) else "",
                ante_prior_word=ante[i].strip() if i < len(ante) else "",
                owner=owner, value=value,
            ))
    return out


def build_lexicon(info: Infopedia) -> None:
    entries: list[LexEntry] = []
    for c in info.object_frame_classes.values():
        entries += _entries_for(c.dictionaries, "ObjectFrameClass", c.name, CLASS_NOUN)
    for b in info.behaviors:
        entries += _entries_for(b.dictionaries + b.modification, "BehaviorClass", b.name, BEHAVIOR_VERB)
    for vs in info.value_sets.values():
        for value, sections in vs.dictionaries.items():
            entries += _entries_for(sections, "ValueSet", vs.name, ATTRIBUTE_VALUE, value=value)
    for t in info.attribute_types.values():
        vs = t.value_set
        if t.alias_of is not None or info.value_sets.get(vs.name) is vs:
            continue
        for value, sections in vs.dictionaries.items():
            entries += _entries_for(sections, "AttributeType", t.qualified, ATTRIBUTE_VALUE,
                                    owner=t.owner, value=value)
    lexicon: dict[str, list[LexEntry]] = {}
    for e in entries:
        lexicon.setdefault(e.word, []).append(e)
    info.lexicon = lexicon


def lexicon_lookup(info: Infopedia, word: str) -> list[LexEntry]:
    return list(info.lexicon.get(word.strip(), ()))
