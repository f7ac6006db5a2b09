import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import CORPUS, GOLDENS, compile_unit
from ross.errors import MembershipError, XmlFormatError
from ross.facts import (
    GlobalAssumptions,
    InstanceAttribute,
    InstanceModel,
    ObjectInstance,
    TranscriptHeader,
    attach,
    create_context,
)
from ross.xmlio import compare_normalized, emit_instance_model, parse_instance_model

FARMER_INFO = compile_unit(CORPUS / "farmer" / "FarmerDonkey.h")
HIT_INFO = compile_unit(CORPUS / "hit" / "PersonHits.h")
SP = "EverydayObjectStructuralParentClass"


@pytest.mark.parametrize("name,info", [("farmer_donkey.xml", FARMER_INFO), ("young_man_hit.xml", HIT_INFO)])
def test_golden_round_trip(name, info):
    text = (GOLDENS / name).read_text()
    model = parse_instance_model(text, info)
    again = emit_instance_model(model)
    assert compare_normalized(text, again)
    assert parse_instance_model(again, info) == model
    assert emit_instance_model(parse_instance_model(again, info)) == again


def test_farmer_golden_values():
    model = parse_instance_model((GOLDENS / "farmer_donkey.xml").read_text(), FARMER_INFO)
    ctx = model.context("1")
    assert ctx.times() == ["T01", "T02"]
    assert ctx.at("T01").find("FarmerObjectFrameClass-1").value("FarmerObjectFrameClass.BeatingState") == "NotBeating"
    assert ctx.at("T02").find("DonkeyObjectFrameClass-1").value("DonkeyObjectFrameClass.PassiveIsBeatenState") == "Beaten"
    assert model.header.document_file == "Samples\\SimpleSentence.txt"


def test_empty_model():
    text = emit_instance_model(InstanceModel())
    assert parse_instance_model(text, FARMER_INFO) == InstanceModel()


def test_unquoted_attribute_is_rejected():
    with pytest.raises(XmlFormatError):
        parse_instance_model("<InstanceModel><TranscriptHeader><TextSource value=x/>"
                             "</TranscriptHeader></InstanceModel>", FARMER_INFO)


def _golden_with(old: str, new: str) -> str:
    return (GOLDENS / "farmer_donkey.xml").read_text().replace(old, new, 1)


def test_non_member_value_names_the_type():
    with pytest.raises(MembershipError, match="BeatingState"):
        parse_instance_model(_golden_with("= NotBeating", "= Beeting"), FARMER_INFO)


def test_time_points_must_be_ordered():
    text = _golden_with('value="T01"', 'value="T03"')
    with pytest.raises(XmlFormatError):
        parse_instance_model(text, FARMER_INFO)


def test_attribute_order_and_whitespace_are_ignored():
    a = '<A x="1" y="2"><B>  text </B><!-- c --></A>'
    b = '<A y="2" x="1">\n  <B>text</B>\n</A>'
    assert compare_normalized(a, b)


def test_difference_is_located():
    golden = (GOLDENS / "young_man_hit.xml").read_text()
    changed = golden.replace("= Hit<", "= NotHit<", 1)
    assert changed != golden
    result = compare_normalized(golden, changed)
    assert not result
    assert result.path.startswith("/InstanceModel/ConceptualModel[1]/LocalContext[1]")
    assert "Hit" in result.detail


BEATING = FARMER_INFO.attribute_types["FarmerObjectFrameClass.BeatingState"]
OWNING = FARMER_INFO.attribute_types["OwningState"]
BEATEN = FARMER_INFO.attribute_types["DonkeyObjectFrameClass.PassiveIsBeatenState"]


def _attrs(draw, types):
    out = {}
    for t in draw(st.lists(st.sampled_from(types), unique_by=lambda t: t.qualified, max_size=len(types))):
        out[t.qualified] = InstanceAttribute(
            t.qualified, draw(st.sampled_from(t.value_set.members)), draw(st.booleans()),
            draw(st.none() | st.floats(0, 1, allow_nan=False)))
    return out


@st.composite
def models(draw):
    header = TranscriptHeader(draw(st.sampled_from(["SubmittedFromWebClient", "DocumentFile"])),
                              draw(st.none() | st.just("Samples\\Text.txt")))
    assumptions = GlobalAssumptions(draw(st.booleans()), draw(st.booleans()), draw(st.booleans()))
    contexts = []
    for c in range(draw(st.integers(0, 2))):
        ctx = create_context(FARMER_INFO, str(c + 1), SP)
        times = sorted(draw(st.sets(st.integers(0, 29), min_size=1, max_size=3)))
        ctx.points.clear()
        for i in times:
            sp = ObjectInstance(SP, f"{SP}-1")
            for n in range(draw(st.integers(0, 3))):
                cls, types = draw(st.sampled_from([("FarmerObjectFrameClass", [BEATING, OWNING]),
                                                   ("DonkeyObjectFrameClass", [BEATEN])]))
                words = tuple(draw(st.lists(st.sampled_from(["farmer", "old", "donkey"]), max_size=2)))
                inst = attach(FARMER_INFO, sp, cls, f"{cls}-{n + 1}", content=words, multiple=draw(st.booleans()))
                inst.attributes = _attrs(draw, types)
            ctx.points[ctx.time_set.members[i]] = sp
        contexts.append(ctx)
    return InstanceModel(header, assumptions, contexts)


@given(models())
def test_emit_parse_identity(model):
    text = emit_instance_model(model)
    back = parse_instance_model(text, FARMER_INFO)
    assert back == model
    assert emit_instance_model(back) == text
