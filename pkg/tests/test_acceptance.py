"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import re
import time
from contextlib import contextmanager

from hypothesis import settings

import test_facts
import test_infopedia
import test_values
import test_xmlio
from conftest import (
    ACCEPTANCE,
    APPENDIX,
    CORPUS,
    GOLDENS,
    INCLUDES,
    OUTCOMES,
    REFERENCE,
    SCENARIOS,
    compile_unit,
    fixture_files,
)
from ross.cli import main
from ross.infopedia import FORMS, compile_files, lexicon_lookup
from ross.infopedia.model import INDEX_NAMES
from ross.inference import APPLIED, MATCH_FAILURE, load_scenario, run_forward_scenario
from ross.syntax import parse_file, parse_text, pretty_print
from ross.values import apply_mapping, apply_transform
from ross.xmlio import compare_normalized, emit_instance_model

NORMALIZATIONS = CORPUS / "NORMALIZATIONS.md"
KEYS = list(INDEX_NAMES) + ["transforms"]


@contextmanager
def criterion(key: str):
    """Record the outcome of the enclosed block under ``key`` and re-raise failures."""
    try:
        yield
    except BaseException as e:
        ACCEPTANCE[key] = (False, f"{type(e).__name__}: {str(e).splitlines()[0] if str(e) else ''}"[:160])
        print(f"FAIL  {key}")
        raise
    ACCEPTANCE.setdefault(key, (True, "ok"))
    print(f"PASS  {key}: {ACCEPTANCE[key][1]}")


def best_of(fn, n=3) -> float:
    """Fastest wall time of ``n`` runs, in seconds."""
    best = float("inf")
    for _ in range(n):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def recorded_counts() -> dict[str, dict[str, int]]:
    rows = {}
    for line in NORMALIZATIONS.read_text().splitlines():
        m = re.match(r"\| (\w+/\w+\.h) \|((?: \d+ \|)+)$", line)
        if m:
            rows[m.group(1)] = dict(zip(KEYS, map(int, m.group(2).replace("|", " ").split())))
    return rows


def recorded_names(label: str) -> list[str]:
    m = re.search(rf"^{label}: (.+)$", NORMALIZATIONS.read_text(), re.M)
    return [n.strip() for n in m.group(1).split(",")]


def test_1_corpus_compile():
    with criterion("1 corpus compile"):
        table = recorded_counts()
        files = fixture_files()
        assert sorted(table) == sorted(f"{p.parent.name}/{p.name}" for p in files)
        for p in files:
            info = compile_unit(p)
            assert info.diagnostics == [], (p.name, info.diagnostics)
            assert info.counts() == table[f"{p.parent.name}/{p.name}"], p.name
        listed, supplemented = recorded_names("listed"), recorded_names("supplemented")
        appendix = compile_unit(APPENDIX / "Appendix.h")
        assert len(listed) == 9 and set(listed) | set(supplemented) == set(appendix.object_frame_classes)
        c = appendix.counts()
        assert (c["behavior_classes"], c["transforms"]) == (6, 1)
        secs = best_of(lambda: compile_files([str(APPENDIX / "Appendix.h")], [str(p) for p in INCLUDES]))
        assert secs < 1.0
        ACCEPTANCE["1 corpus compile"] = (True, f"{len(files)} units, 0 diagnostics, counts match; "
                                                f"appendix {len(listed)} listed + {len(supplemented)} "
                                                f"supplemented classes, 6 behaviors, 1 transform; {secs:.3f} s")


def test_2_parser_round_trip():
    with criterion("2 parser round-trip"):
        files = fixture_files()
        ok = 0
        for p in files:
            statements = parse_file(p, INCLUDES)
            ok += parse_text(pretty_print(statements)) == statements
        assert ok == len(files)
        ACCEPTANCE["2 parser round-trip"] = (True, f"{ok}/{len(files)} fixtures")


def test_3_numeric_fixtures():
    with criterion("3 numeric fixtures"):
        assert apply_mapping(compile_unit(REFERENCE / "Declarations.h").mapping("MillimeterToMeter"), 1000) == 1
        t = compile_unit(APPENDIX / "Transforms.h").transform("RelativePositionSpatialToMillimeterBasedCoords-01")
        got = {}
        for source in ("Adjacent", "NotAdjacent", "IdenticalLocation"):
            out = apply_transform(t, {t.source_types[0]: source})
            got[source] = tuple(out[n] for n in t.dest_types)
        assert got == {"Adjacent": (2, 0, 0), "NotAdjacent": (1000, 0, 0), "IdenticalLocation": (0, 0, 0)}
        ACCEPTANCE["3 numeric fixtures"] = (True, f"MillimeterToMeter(1000)=1; {got}")


def test_4_lexicon_fixtures():
    with criterion("4 lexicon fixtures"):
        (opal,) = lexicon_lookup(compile_unit(REFERENCE / "AttributeTypes.h"), "opal")
        assert (opal.name, opal.value) == ("VehicleExteriorColor", "White")
        resident = {e.name for e in lexicon_lookup(compile_unit(REFERENCE / "HospitalClasses.h"), "resident")}
        assert len(resident) == 2
        (hitting,) = lexicon_lookup(compile_unit(CORPUS / "hit" / "PersonHits.h"), "hitting")
        assert FORMS[hitting.ordinal % 5] == "present-participle"
        ACCEPTANCE["4 lexicon fixtures"] = (True, "opal -> VehicleExteriorColor/White; resident -> 2 classes; "
                                                  "hitting -> present-participle")


def test_5_farmer_donkey_end_to_end():
    with criterion("5 farmer/donkey end-to-end"):
        golden = (GOLDENS / "farmer_donkey.xml").read_text()
        scenario = SCENARIOS / "farmer_donkey.xml"
        result = compare_normalized(golden, emit_instance_model(run_forward_scenario(load_scenario(scenario)).model))
        assert result, f"{result.path}: {result.detail}"
        secs = best_of(lambda: emit_instance_model(run_forward_scenario(load_scenario(scenario)).model))
        assert secs < 1.0
        ACCEPTANCE["5 farmer/donkey end-to-end"] = (True, f"equal to golden; {secs:.3f} s")


def test_6_winograd_forward_inference():
    with criterion("6 advocated forward inference"):
        scenario = SCENARIOS / "advocated.xml"
        report = run_forward_scenario(load_scenario(scenario))
        top = report.outcomes[0]
        assert top.status == APPLIED
        assert top.behavior == "TalkerAdvocatesActionWithListenersWhoAnticipateSomething"
        assert [a.behavior for a in top.applications][1:] == ["AnticipateHarmfulEventBehaviorClass"]
        ctx = report.model.contexts[0]
        final = ctx.at(ctx.times()[-1])
        listener = [i for i in final.walk()
                    if i.value("IntelligentAgentObjectFrameClass.AnticipatingHarmfulEventState") == "Anticipating"]
        event = [i for i in final.walk()
                 if i.value("CognitiveRepresentationOfHarmfulEvent.PassiveIsAnticipatedState") == "Anticipated"]
        assert listener and event
        secs = best_of(lambda: run_forward_scenario(load_scenario(scenario)))
        assert secs < 1.0
        ACCEPTANCE["6 advocated forward inference"] = (
            True, f"nested rule applied; {listener[0].identifier} Anticipating, "
                  f"{event[0].identifier} Anticipated at {ctx.times()[-1]}; {secs:.3f} s")


def test_7_probability_ranking():
    with criterion("7 refused probability ranking"):
        report = run_forward_scenario(load_scenario(SCENARIOS / "refused.xml"))
        seen = [(o.behavior, o.status, round(o.probability, 6)) for o in report.outcomes]
        assert seen == [
            ("RefusingSomethingDueToFearBehaviorClass", APPLIED, 0.9),
            ("RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass", APPLIED, 0.02),
            ("RefusingSomethingDueToScheduleConflictBehaviorClass", MATCH_FAILURE, 1.0),
        ]
        ACCEPTANCE["7 refused probability ranking"] = (True, "Fear 0.9 > FearOnPartOfRequestor 0.02; "
                                                             "ScheduleConflict match-failure")


PROPERTY_SUITES = [
    ("successor laws", test_values.test_successor_laws),
    ("range membership oracle", test_values.test_range_membership_matches_enumeration),
    ("enum membership oracle", test_values.test_enum_membership_matches_enumeration),
    ("inheritance cycle injection", test_infopedia.test_injected_cycle_is_detected),
    ("clone law", test_facts.test_clone_law),
    ("emit/parse identity", test_xmlio.test_emit_parse_identity),
]


def _cli_bytes(capsys, *argv) -> str:
    assert main([str(a) for a in argv]) == 0
    return capsys.readouterr().out


def test_8_property_suites(capsys):
    with criterion("8 property suites"):
        reused = 0
        for name, suite in PROPERTY_SUITES:
            status = OUTCOMES.get(suite.__name__)
            if status is None:
                suite()  # not run yet in this session: run the profile's randomized cases here
            else:
                assert status == "passed", f"{name}: {status}"
                reused += 1
        for argv in (("compile", APPENDIX / "Appendix.h"), ("infer", "refused"), ("emit-xml", "farmer_donkey")):
            assert _cli_bytes(capsys, *argv) == _cli_bytes(capsys, *argv), argv
        ACCEPTANCE["8 property suites"] = (
            True, f"{len(PROPERTY_SUITES)} suites x {settings().max_examples} cases "
                  f"({reused} already run this session); compile/infer/emit byte-identical across runs")


def test_8_profile_runs_at_least_100_cases():
    assert settings().max_examples >= 100
