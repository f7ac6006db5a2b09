import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import APPENDIX, REFERENCE, compile_unit
from ross.errors import LookupFailure
from ross.infopedia import FORMS, ancestor_order, check, find_behavior_classes, find_cycles, lexicon_lookup, verb_form
from ross.syntax import parse_text

LISTED = {
    "BehavioralStructuralParentClass", "EverydayObjectStructuralParentClass", "EverydayObjectFrameClass",
    "IntelligentAgentObjectFrameClass", "PersonObjectFrameClass", "GovernmentSubjectObjectFrameClass",
    "GovernmentOfficialObjectFrameClass", "CityCouncilmanObjectFrameClass", "DemonstratorObjectFrameClass",
}


def test_appendix_counts(appendix):
    c = appendix.counts()
    assert (c["object_frame_classes"], c["behavior_classes"], c["transforms"]) == (14, 6, 1)
    assert not appendix.diagnostics or all(d.severity != "error" for d in appendix.diagnostics)


def test_listed_classes_present(appendix):
    assert LISTED <= set(appendix.object_frame_classes)


def test_inheritance(appendix):
    anc = appendix.ancestors("CityCouncilmanObjectFrameClass")
    assert anc[0] == "GovernmentOfficialObjectFrameClass"
    assert appendix.is_a("CityCouncilmanObjectFrameClass", "PersonObjectFrameClass")
    assert not appendix.is_a("PersonObjectFrameClass", "CityCouncilmanObjectFrameClass")
    assert appendix.compatible("PersonObjectFrameClass", "CityCouncilmanObjectFrameClass")


def test_unknown_lookups(appendix):
    with pytest.raises(LookupFailure):
        appendix.ofc("NoSuchClass")
    with pytest.raises(LookupFailure):
        appendix.attribute_type_for("PersonObjectFrameClass", "NoSuchType")


def test_opal_names_a_color_value():
    info = compile_unit(REFERENCE / "AttributeTypes.h")
    (entry,) = lexicon_lookup(info, "opal")
    assert (entry.name, entry.value, entry.kind) == ("VehicleExteriorColor", "White", "AttributeType")


def test_resident_names_two_classes():
    info = compile_unit(REFERENCE / "HospitalClasses.h")
    names = {e.name for e in lexicon_lookup(info, "resident")}
    assert names == {"HospitalResidentDoctorObjectFrameClass", "HospitalResidentPatientObjectFrameClass"}


def test_class_local_attribute_types_shadow():
    info = compile_unit(REFERENCE / "HospitalClasses.h")
    doc = info.attribute_type_for("HospitalResidentDoctorObjectFrameClass", "AttributeTypeIllnessState")
    pat = info.attribute_type_for("HospitalResidentPatientObjectFrameClass", "AttributeTypeIllnessState")
    assert (doc.probability, pat.probability) == (0.01, 0.9)


def test_hitting_is_present_participle(hit):
    b = hit.behavior("PersonHitsPerson")
    (section,) = [s for s in b.dictionaries if s.kind == "Dictionary"]
    assert verb_form(section, "hitting") == {"present-participle"}
    assert verb_form(section, "punched") == {"simple-past", "past-participle"}
    (entry,) = lexicon_lookup(hit, "hitting")
    assert FORMS[entry.ordinal % 5] == "present-participle"


def test_lexicon_miss(appendix):
    assert lexicon_lookup(appendix, "qqq") == []


def test_find_behavior_classes(appendix):
    refused = [b.name for b in find_behavior_classes(appendix, "refused")]
    assert refused == [
        "RefusingSomethingDueToFearBehaviorClass",
        "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass",
        "RefusingSomethingDueToScheduleConflictBehaviorClass",
    ]
    assert find_behavior_classes(appendix, "zzz") == []
    assert find_behavior_classes(appendix, "refused", actor="EverydayObjectStructuralParentClass") == []


def test_textual_definition_counts_match_compiler(appendix):
    # independent oracle: count top-level definition keywords in the appendix sources
    text = "".join(re.sub(r"//.*", "", p.read_text()) for p in sorted(APPENDIX.glob("*.h")))
    for keyword, key in (("ObjectFrameClass", "object_frame_classes"), ("BehaviorClass", "behavior_classes"),
                         ("Transform", "transforms"), ("DimensionSystem", "dimension_systems")):
        found = len(re.findall(rf'^\s*{keyword}\s+"', text, re.M))
        assert found == appendix.counts()[key], keyword


def _star_classes(graph):
    parts = []
    for name, highers in graph.items():
        hc = f'HigherClasses ( {{ {", ".join(chr(34) + h + chr(34) for h in highers)} }} );' if highers else ""
        parts.append(f'ObjectFrameClass "{name}" ( {hc} );')
    return "\n".join(parts)


@st.composite
def dags(draw):
    n = draw(st.integers(2, 8))
    names = [f"K{i}" for i in range(n)]
    graph = {}
    for i, name in enumerate(names):
        # edges only point to earlier names, so the graph is acyclic
        graph[name] = tuple(draw(st.lists(st.sampled_from(names[:i]), unique=True, max_size=2))) if i else ()
    return graph


@given(dags())
def test_acyclic_graphs_compile(graph):
    info, diags = check(parse_text(_star_classes(graph)))
    assert info is not None and not find_cycles(graph)
    for name in graph:
        assert set(info.ancestors(name)) == set(ancestor_order(graph, name))


@given(dags(), st.data())
def test_injected_cycle_is_detected(graph, data):
    names = list(graph)
    lo = data.draw(st.integers(0, len(names) - 2))
    hi = data.draw(st.integers(lo + 1, len(names) - 1))
    # make a path hi -> ... -> lo, then close it with lo -> hi
    for i in range(lo + 1, hi + 1):
        if names[i - 1] not in graph[names[i]]:
            graph[names[i]] += (names[i - 1],)
    graph[names[lo]] += (names[hi],)
    cycles = find_cycles(graph)
    assert cycles and all(c[0] == c[-1] for c in cycles)
    for c in cycles:
        for a, b in zip(c, c[1:]):
            assert b in graph[a]
    info, diags = check(parse_text(_star_classes(graph)))
    assert info is None
    assert any(d.kind == "inheritance-cycle" for d in diags)
