import copy
import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import APPENDIX, CORPUS, INCLUDES, SCENARIOS, compile_unit
from ross.errors import DepthLimitExceeded, EndOfTimeline, IncompatibleSeed, MatchFailure, ScenarioError
from ross.facts import attach, create_context, set_state_attribute
from ross.inference import (
    APPLIED,
    ASSUMED,
    EVIDENCE,
    MATCH_FAILURE,
    RuleOutcome,
    apply_behavior_class,
    apply_nested_reference,
    bind_binder_source,
    determine_next_timeline_time_point,
    load_scenario,
    parse_scenario,
    rank_rule_candidates,
    render_report,
    run_candidate,
    run_forward_scenario,
    sandbox,
)
from ross.infopedia import ReferenceNode, compile_files
from ross.xmlio import emit_instance_model

SP = "EverydayObjectStructuralParentClass"
FARMER_H = CORPUS / "farmer" / "FarmerDonkey.h"
FARMER_INFO = compile_unit(FARMER_H)
BEAT = FARMER_INFO.behavior("FarmerBeatsDonkeyBehaviorClass")
BEATING = "FarmerObjectFrameClass.BeatingState"
BEATEN = "DonkeyObjectFrameClass.PassiveIsBeatenState"


def _farm(info=FARMER_INFO, farmers=1, donkeys=1):
    ctx = create_context(info, "1", SP)
    sp = ctx.at("T01")
    fs = [attach(info, sp, "FarmerObjectFrameClass", f"FarmerObjectFrameClass-{i + 1}") for i in range(farmers)]
    ds = [attach(info, sp, "DonkeyObjectFrameClass", f"DonkeyObjectFrameClass-{i + 1}") for i in range(donkeys)]
    return ctx, fs, ds


def test_next_time_point(appendix):
    assert determine_next_timeline_time_point(FARMER_INFO, SP, "T01") == "T02"
    assert determine_next_timeline_time_point(FARMER_INFO, SP, "T29") == "T30"
    with pytest.raises(EndOfTimeline):
        determine_next_timeline_time_point(FARMER_INFO, SP, "T30")


def test_binder_source_binding():
    ctx, (farmer,), _ = _farm()
    env = bind_binder_source(FARMER_INFO, BEAT, farmer, ctx, "T01")
    assert env.bindings == {"a$": "Identical", "t1$": "T01", "q$": farmer.identifier}


def test_incompatible_seed():
    ctx, _, (donkey,) = _farm()
    with pytest.raises(IncompatibleSeed):
        bind_binder_source(FARMER_INFO, BEAT, donkey, ctx, "T01")


def test_apply_farmer_beats_donkey():
    ctx, (farmer,), (donkey,) = _farm()
    env = bind_binder_source(FARMER_INFO, BEAT, farmer, ctx, "T01")
    app = apply_behavior_class(FARMER_INFO, ctx, BEAT, env, farmer.identifier)
    assert (app.major_time, app.minor_time, ctx.times()) == ("T01", "T02", ["T01", "T02"])
    t1, t2 = ctx.at("T01"), ctx.at("T02")
    assert t1.find(farmer.identifier).value(BEATING) == "NotBeating"
    assert t1.find(donkey.identifier).value(BEATEN) == "NotBeaten"
    assert t2.find(farmer.identifier).value(BEATING) == "Beating"
    assert t2.find(donkey.identifier).value(BEATEN) == "Beaten"
    assert app.antecedent == {"actor": farmer.identifier, "actee": donkey.identifier}
    assert app.probability == 1.0 and app.created == []


def test_failed_application_leaves_context_unchanged():
    ctx, (farmer,), _ = _farm()
    set_state_attribute(FARMER_INFO, farmer, BEATING, "Beating")
    before = copy.deepcopy(ctx)
    env = bind_binder_source(FARMER_INFO, BEAT, farmer, ctx, "T01")
    with pytest.raises(MatchFailure):
        apply_behavior_class(FARMER_INFO, ctx, BEAT, env, farmer.identifier)
    assert ctx == before and ctx.last_time == "T01"


def test_schedule_conflict_rule_is_a_match_failure(appendix):
    scenario = load_scenario(SCENARIOS / "refused.xml")
    b = appendix.behavior("RefusingSomethingDueToScheduleConflictBehaviorClass")
    outcome = run_candidate(appendix, scenario, b)
    assert outcome.status == MATCH_FAILURE and "AnticipatingScheduleConflictState" in outcome.reason


def test_refused_ranking():
    report = run_forward_scenario(load_scenario(SCENARIOS / "refused.xml"))
    fear, requestor, schedule = report.outcomes
    assert report.ranking == [
        "RefusingSomethingDueToFearBehaviorClass",
        "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass",
        "RefusingSomethingDueToScheduleConflictBehaviorClass",
    ]
    assert (fear.status, fear.probability) == (APPLIED, pytest.approx(0.9))
    assert (requestor.status, requestor.probability) == (APPLIED, pytest.approx(0.02))
    assert schedule.status == MATCH_FAILURE
    assert [(n.mode, n.probability) for n in fear.nested] == [(EVIDENCE, 0.9)]
    assert [(n.mode, n.actor) for n in requestor.nested] == [(ASSUMED, "DemonstratorObjectFrameClass-1")]


def test_advocated_applies_nested_rule():
    report = run_forward_scenario(load_scenario(SCENARIOS / "advocated.xml"))
    (top,) = report.selected
    assert top.behavior == "TalkerAdvocatesActionWithListenersWhoAnticipateSomething"
    assert [a.behavior for a in top.applications] == [
        "TalkerAdvocatesActionWithListenersWhoAnticipateSomething", "AnticipateHarmfulEventBehaviorClass"]
    final = report.model.contexts[0]
    sp = final.at(final.times()[-1])
    values = {(i.cls, k.rsplit(".", 1)[-1], a.value) for i in sp.walk() for k, a in i.attributes.items()}
    assert ("CityCouncilmanObjectFrameClass", "AnticipatingHarmfulEventState", "Anticipating") in values
    assert ("CognitiveRepresentationOfHarmfulEvent", "PassiveIsAnticipatedState", "Anticipated") in values


def test_nested_depth_limit(appendix):
    scenario = load_scenario(SCENARIOS / "advocated.xml")
    top = appendix.behavior("TalkerAdvocatesActionWithListenersWhoAnticipateSomething")
    _, ctx, hints, lead = sandbox(appendix, scenario)
    env = bind_binder_source(appendix, top, ctx.at("T01").find(lead), ctx, "T01")
    app = apply_behavior_class(appendix, ctx, top, env, lead, hints=hints)
    (ref,) = app.pending
    assert isinstance(ref, ReferenceNode)
    with pytest.raises(DepthLimitExceeded):
        apply_nested_reference(appendix, ctx, ref, env, max_depth=0)
    apps = apply_nested_reference(appendix, ctx, ref, env, max_depth=1)
    assert [a.behavior for a in apps] == ["AnticipateHarmfulEventBehaviorClass"]


def test_rank_rule_candidates():
    outcomes = [
        RuleOutcome("A", 0, MATCH_FAILURE),
        RuleOutcome("B", 1, APPLIED, probability=0.5),
        RuleOutcome("C", 2, APPLIED, probability=0.9),
        RuleOutcome("D", 3, APPLIED, probability=0.5),
    ]
    assert [o.behavior for o in rank_rule_candidates(outcomes)] == ["C", "B", "D", "A"]


def test_unknown_verb_has_no_candidates():
    scenario = load_scenario(SCENARIOS / "farmer_donkey.xml")
    scenario = dataclasses.replace(scenario, query=dataclasses.replace(scenario.query, verb="zzz"))
    report = run_forward_scenario(scenario)
    assert report.outcomes == [] and report.selected == []
    assert report.model.contexts[0].times() == ["T01"]
    assert "no candidates" in render_report(report)


@pytest.mark.parametrize("text", [
    "<Scenario><Query verb='beat'/></Scenario>",
    "<Scenario><Seed class='X' role='actor'/></Scenario>",
    "<Scenario><Seed class='X' role='boss'/><Query verb='beat'/></Scenario>",
    "<Scenario maxDepth='-1'><Seed class='X' role='actor'/><Query verb='beat'/></Scenario>",
    "<Scenario><Seed class='X' role='actor'/><Query verb=''/></Scenario>",
    "<Scenario><Seed",
])
def test_scenario_errors(text, tmp_path):
    with pytest.raises(ScenarioError):
        parse_scenario(text, tmp_path)


NEGATED_UNIT = """
#include <FarmerDonkey.h>
BehaviorClass "FarmerSparesDonkeyBehaviorClass"
(
  <CausalRule val = "true" />
  <BridgeObjectFrameClass ref = BehavioralStructuralParentClass />
  <Negation val = "true" />
  Dictionary ( English ( { "spare", "spared", "spared", "spares", "sparing" } ); );
  PriorStates
  (
    PopulatedObjectClass "AntecedentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <BinderSourceFlag val = "true" />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation var = a$ />
      <Attribute ref = RelativeTime var = t1$ />
      <Attribute ref = BeatingState val = "NotBeating" />
    );
  );
  PostStates
  (
    PopulatedObjectClass "ConsequentActor"
    (
      <ObjectFrameClass ref = FarmerObjectFrameClass />
      <DimensionSystem ref = RelativePosition />
      <Attribute ref = RelativeLocation expr = a$ />
      <Attribute ref = RelativeTime expr = (t1$ + 1) />
      <Attribute ref = BeatingState val = "Beating" />
    );
  );
);
"""


def test_negation_marks_consequent_states(tmp_path):
    src = tmp_path / "Spare.h"
    src.write_text(NEGATED_UNIT)
    info = compile_files([str(src)], [str(FARMER_H.parent), *map(str, INCLUDES)])
    rule = info.behavior("FarmerSparesDonkeyBehaviorClass")
    assert rule.negation
    ctx, (farmer,), _ = _farm(info, donkeys=0)
    env = bind_binder_source(info, rule, farmer, ctx, "T01")
    apply_behavior_class(info, ctx, rule, env, farmer.identifier)
    before = ctx.at("T01").find(farmer.identifier).get(BEATING)
    after = ctx.at("T02").find(farmer.identifier).get(BEATING)
    assert (before.value, before.negated) == ("NotBeating", False)
    assert (after.value, after.negated) == ("Beating", True)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_antecedent_roles_never_share_an_instance(farmers, donkeys, data):
    ctx, fs, ds = _farm(farmers=farmers, donkeys=donkeys)
    seed = data.draw(st.sampled_from(fs))
    env = bind_binder_source(FARMER_INFO, BEAT, seed, ctx, "T01")
    app = apply_behavior_class(FARMER_INFO, ctx, BEAT, env, seed.identifier)
    assert app.antecedent["actor"] == seed.identifier
    assert len(set(app.antecedent.values())) == len(app.antecedent)
    assert len(set(app.consequent.values())) == len(app.consequent)
    assert app.consequent == app.antecedent
    # rule writes stay strictly after the major time point
    assert ctx.times() == ["T01", "T02"]


BEHAVIOR_UNITS = [APPENDIX / "Appendix.h", FARMER_H, CORPUS / "hit" / "PersonHits.h"]


@pytest.mark.parametrize("unit", BEHAVIOR_UNITS, ids=lambda p: p.name)
def test_binder_source_binds_every_declared_variable(unit):
    info = compile_unit(unit)
    for b in info.behaviors:
        node = next(n for n in b.populated("prior") if n.binder_source)
        sp_class = info.view(node.cls).sp_bases[0]
        ctx = create_context(info, "1", sp_class)
        seed = attach(info, ctx.at(ctx.last_time), node.cls, "Seed-1")
        env = bind_binder_source(info, b, seed, ctx, ctx.last_time)
        declared = {s.value for s in (*node.locational, *node.qualitative) if s.kind == "var"}
        assert declared == set(env.bindings), b.name


@pytest.mark.parametrize("name", ["farmer_donkey", "hit", "advocated", "refused"])
def test_runs_are_deterministic(name):
    runs = [run_forward_scenario(load_scenario(SCENARIOS / f"{name}.xml")) for _ in range(2)]
    assert render_report(runs[0]) == render_report(runs[1])
    assert emit_instance_model(runs[0].model) == emit_instance_model(runs[1].model)
