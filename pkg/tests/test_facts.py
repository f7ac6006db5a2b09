import copy

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS, REFERENCE, compile_unit
from ross.errors import (
    AttributeConflict,
    DuplicateIdentifier,
    MatchFailure,
    MembershipError,
    NoTemporalDimension,
    TimelineError,
    UnknownInstance,
)
from ross.facts import (
    ANTECEDENT,
    CONSEQUENT,
    GlobalAssumptions,
    Match,
    apply_populated_object_class,
    attach,
    attribute_at,
    clone_structural_parent,
    create_context,
    set_state_attribute,
)
from ross.syntax.ast import NIL
from ross.values import Environment

SP = "EverydayObjectStructuralParentClass"
FARMER = "FarmerObjectFrameClass"
DONKEY = "DonkeyObjectFrameClass"
BEATING = "FarmerObjectFrameClass.BeatingState"
BEATEN = "DonkeyObjectFrameClass.PassiveIsBeatenState"
ANTICIPATING = "IntelligentAgentObjectFrameClass.AnticipatingHarmfulEventState"

FARMER_INFO = compile_unit(CORPUS / "farmer" / "FarmerDonkey.h")


def _scene(info=FARMER_INFO):
    ctx = create_context(info, "1", SP)
    sp = ctx.at("T01")
    farmer = attach(info, sp, FARMER, "FarmerObjectFrameClass-1", content=("farmer",))
    donkey = attach(info, sp, DONKEY, "DonkeyObjectFrameClass-1", content=("donkey",))
    return ctx, sp, farmer, donkey


def test_create_context_starts_at_first_time_point():
    ctx = create_context(FARMER_INFO, "1", SP)
    assert ctx.times() == ["T01"] and ctx.last_time == "T01"
    assert ctx.at("T01").identifier == f"{SP}-1" and ctx.at("T01").structure == []


def test_create_context_rejects_bad_inputs():
    with pytest.raises(TimelineError):
        create_context(FARMER_INFO, "1", SP, initial="T99")
    with pytest.raises(NoTemporalDimension):
        create_context(FARMER_INFO, "1", FARMER)


def test_attach_order_and_duplicates():
    _, sp, farmer, _ = _scene()
    assert [c.identifier for c in sp.structure] == ["FarmerObjectFrameClass-1", "DonkeyObjectFrameClass-1"]
    with pytest.raises(DuplicateIdentifier):
        attach(FARMER_INFO, sp, FARMER, "FarmerObjectFrameClass-1")


def test_attach_fills_relationship_placeholders():
    info = compile_unit(REFERENCE / "ObjectFrameClasses.h")
    sp = create_context(info, "1", SP).at("T01")
    key = attach(info, sp, "SteelIgnitionKeyObjectFrameClass", "Key-1")
    names = {k.rsplit(".", 1)[-1] for k in key.relationship}
    assert {"X-Coordinate", "Y-Coordinate", "Z-Coordinate"} <= names
    assert all(v is NIL for v in key.relationship.values())
    with pytest.raises(MembershipError):
        attach(info, sp, "SteelIgnitionKeyObjectFrameClass", "Key-2", {"X-Coordinate": -5})


def test_set_state_attribute():
    _, _, farmer, _ = _scene()
    set_state_attribute(FARMER_INFO, farmer, "BeatingState", "NotBeating")
    set_state_attribute(FARMER_INFO, farmer, "BeatingState", "NotBeating")
    assert farmer.value(BEATING) == "NotBeating"
    with pytest.raises(AttributeConflict):
        set_state_attribute(FARMER_INFO, farmer, "BeatingState", "Beating")
    with pytest.raises(MembershipError):
        set_state_attribute(FARMER_INFO, farmer, "BeatingState", "Beeting")
    set_state_attribute(FARMER_INFO, farmer, "BeatingState", "Beating", replace=True)
    assert farmer.value(BEATING) == "Beating"


def test_clone_drops_optional_causal_features():
    ctx, _, farmer, _ = _scene()
    set_state_attribute(FARMER_INFO, farmer, ANTICIPATING, "Anticipating")
    set_state_attribute(FARMER_INFO, farmer, BEATING, "NotBeating")
    sp2 = clone_structural_parent(FARMER_INFO, ctx, "T01", "T02")
    f2 = sp2.find("FarmerObjectFrameClass-1")
    assert f2.get(ANTICIPATING) is None and f2.value(BEATING) == "NotBeating"
    assert farmer.value(ANTICIPATING) == "Anticipating"
    assert ctx.last_time == "T02"


def test_clone_of_empty_structural_parent():
    ctx = create_context(FARMER_INFO, "1", SP)
    sp2 = clone_structural_parent(FARMER_INFO, ctx, "T01", "T02")
    assert sp2.structure == [] and sp2.identifier == ctx.at("T01").identifier


def test_attribute_at_perpetuation():
    ctx, _, farmer, _ = _scene()
    set_state_attribute(FARMER_INFO, farmer, BEATING, "NotBeating")
    clone_structural_parent(FARMER_INFO, ctx, "T01", "T03")
    ctx.at("T03").find(farmer.identifier).attributes.pop(BEATING)
    assert attribute_at(FARMER_INFO, ctx, farmer.identifier, BEATING, "T03") == "NotBeating"
    off = GlobalAssumptions(perpetuation=False, empty_space=False)
    assert attribute_at(FARMER_INFO, ctx, farmer.identifier, BEATING, "T03", off) is None
    with pytest.raises(UnknownInstance):
        attribute_at(FARMER_INFO, ctx, "Nobody-1", BEATING, "T01")


MATERIAL_UNIT = """
#include <EverydayObjectDefinitions.h>
ObjectFrameClass "BlockObjectFrameClass"
(
  HigherClasses ( { "EverydayObjectFrameClass" } );
  AttributeTypes
  (
    AttributeType "Material"
    (
      <SuperType val = "Qualitative"/>
      "Values" ( { "Space", "Metal", "Plastic" } );
    );
  );
);
"""


def test_attribute_at_empty_space_default(tmp_path):
    src = tmp_path / "Block.h"
    src.write_text(MATERIAL_UNIT)
    info = compile_unit(src)
    ctx = create_context(info, "1", SP)
    block = attach(info, ctx.at("T01"), "BlockObjectFrameClass", "Block-1")
    assert attribute_at(info, ctx, block.identifier, "Material", "T01") == "Space"
    off = GlobalAssumptions(empty_space=False)
    assert attribute_at(info, ctx, block.identifier, "Material", "T01", off) is None
    set_state_attribute(info, block, "Material", "Metal")
    assert attribute_at(info, ctx, block.identifier, "Material", "T01") == "Metal"


BEAT = FARMER_INFO.behavior("FarmerBeatsDonkeyBehaviorClass")
ACTOR_NODE, ACTEE_NODE = BEAT.populated("prior")
POST_ACTOR, POST_ACTEE = BEAT.populated("post")
TIMES = FARMER_INFO.temporal_system(SP)[1].value_set


def _antecedent(ctx, sp, env, match, node, **kw):
    return apply_populated_object_class(FARMER_INFO, node, sp.structure, env, ANTECEDENT, match=match,
                                        parent=sp, context=ctx, time_set=TIMES, **kw)


def test_antecedent_matches_and_binds():
    ctx, sp, farmer, donkey = _scene()
    env, match = Environment(), Match()
    inst, created = _antecedent(ctx, sp, env, match, ACTOR_NODE, forced=farmer.identifier)
    assert inst is farmer and not created
    assert env.get("q$") == farmer.identifier and env.get("t1$") == "T01"
    assert farmer.value(BEATING) == "NotBeating" and farmer.causality == "cause"
    inst2, _ = _antecedent(ctx, sp, env, match, ACTEE_NODE)
    assert inst2 is donkey and donkey.value(BEATEN) == "NotBeaten"
    assert match.roles == {"actor": farmer.identifier, "actee": donkey.identifier}


def test_antecedent_conflict_is_a_match_failure():
    ctx, sp, farmer, _ = _scene()
    set_state_attribute(FARMER_INFO, farmer, BEATING, "Beating")
    with pytest.raises(MatchFailure):
        _antecedent(ctx, sp, Environment(), Match(), ACTOR_NODE)


def test_antecedent_creates_missing_instance():
    ctx = create_context(FARMER_INFO, "1", SP)
    sp = ctx.at("T01")
    env = Environment({"a$": "Identical", "t1$": "T01"})
    inst, created = _antecedent(ctx, sp, env, Match(), ACTEE_NODE)
    assert created and inst.identifier == f"{DONKEY}-1" and sp.structure == [inst]


def test_consequent_overwrites():
    ctx, sp, farmer, _ = _scene()
    set_state_attribute(FARMER_INFO, farmer, BEATING, "NotBeating")
    env = Environment({"a$": "Identical", "t1$": "T01"})
    inst, _ = apply_populated_object_class(FARMER_INFO, POST_ACTOR, sp.structure, env, CONSEQUENT,
                                           parent=sp, context=ctx, time_set=TIMES)
    assert inst is farmer and farmer.value(BEATING) == "Beating" and farmer.causality == "effect"
    assert farmer.placement["RelativePosition.RelativeTime"] == "T02"


def test_role_hint_keeps_passive_node_off_the_actor():
    ctx, sp, farmer, donkey = _scene()
    # a hinted actor never fills the actee node, even when its class would fit
    node = FARMER_INFO.behavior("PersonTriesToKillAnimalBehaviorClass").populated("prior")[1]
    hints = {farmer.identifier: "actor", donkey.identifier: "actee"}
    inst, _ = _antecedent(ctx, sp, Environment({"a$": "Identical", "t1$": "T01"}), Match(), node, hints=hints)
    assert inst is donkey


# ---- properties --------------------------------------------------------------

PERSON_STATES = {
    t.qualified: t.value_set.members
    for t in FARMER_INFO.view(FARMER).attribute_types.values()
    if t.value_set.kind == "enum" and not t.is_identity
}
OPTIONAL = {k for k in PERSON_STATES if FARMER_INFO.attribute_types[k].optional_causal}


@st.composite
def populated_scenes(draw):
    ctx = create_context(FARMER_INFO, "1", SP)
    sp = ctx.at("T01")
    for i in range(draw(st.integers(0, 4))):
        inst = attach(FARMER_INFO, sp, FARMER, f"{FARMER}-{i + 1}")
        for key in draw(st.lists(st.sampled_from(sorted(PERSON_STATES)), unique=True, max_size=4)):
            set_state_attribute(FARMER_INFO, inst, key, draw(st.sampled_from(PERSON_STATES[key])))
    return ctx


def test_person_has_optional_causal_features():
    assert OPTIONAL and set(PERSON_STATES) - OPTIONAL


@given(populated_scenes(), st.integers(1, 29))
def test_clone_law(ctx, step):
    before = copy.deepcopy(ctx.at("T01"))
    to = TIMES.members[step]
    sp2 = clone_structural_parent(FARMER_INFO, ctx, "T01", to)
    assert ctx.at("T01") == before
    assert [i.identifier for i in sp2.walk()] == [i.identifier for i in before.walk()]
    for old, new in zip(before.walk(), sp2.walk()):
        expected = {k: v for k, v in old.attributes.items() if k not in OPTIONAL}
        assert new.attributes == expected
        assert new.relationship == old.relationship


@given(populated_scenes(), st.data())
def test_timeline_is_monotone(ctx, data):
    steps = data.draw(st.lists(st.integers(1, 5), min_size=1, max_size=5))
    t = "T01"
    for k in steps:
        nxt = TIMES.shift(t, k)
        clone_structural_parent(FARMER_INFO, ctx, t, nxt)
        assert TIMES.index(ctx.last_time) > TIMES.index(t)
        with pytest.raises(TimelineError):
            clone_structural_parent(FARMER_INFO, ctx, nxt, t)
        t = nxt
    assert ctx.times() == sorted(ctx.points, key=TIMES.index)


@given(st.sampled_from(["Identical", "Adjacent1", "Adjacent2"]), st.integers(0, 20))
def test_population_is_idempotent(a, ti):
    ctx, sp, farmer, donkey = _scene()
    env = Environment({"a$": a, "t1$": TIMES.members[ti]})
    _antecedent(ctx, sp, env, Match(), ACTOR_NODE)
    _antecedent(ctx, sp, env, Match(), ACTEE_NODE)
    snapshot = copy.deepcopy(sp)
    _antecedent(ctx, sp, env.copy(), Match(), ACTOR_NODE)
    _antecedent(ctx, sp, env.copy(), Match(), ACTEE_NODE)
    assert sp == snapshot
    assert [i.attributes for i in sp.walk()] == [i.attributes for i in snapshot.walk()]
