import pytest

from conftest import APPENDIX, CORPUS, GOLDENS, REFERENCE, SCENARIOS
from ross.cli import main
from ross.xmlio import compare_normalized


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_compile_counts(capsys):
    code, out, _ = run(capsys, "compile", APPENDIX / "Appendix.h")
    assert code == 0
    assert "object frame classes: 14\n" in out and "behavior classes: 6\n" in out and "transforms: 1\n" in out


def test_compile_nothing(capsys):
    code, out, _ = run(capsys, "compile")
    assert code == 0 and set(line.split(": ")[1] for line in out.splitlines()) == {"0"}


def test_compile_reports_errors(capsys, tmp_path):
    bad = tmp_path / "Bad.h"
    bad.write_text('ObjectFrameClass "A" ( HigherClasses ( { "B" } ); );\n'
                   'ObjectFrameClass "B" ( HigherClasses ( { "A" } ); );\n')
    code, _, err = run(capsys, "compile", bad)
    assert code == 1 and "inheritance-cycle" in err


def test_lexicon(capsys):
    code, out, _ = run(capsys, "lexicon", REFERENCE / "AttributeTypes.h", "--word", "opal")
    assert code == 0 and out == "opal\tattribute-value\tAttributeType\tVehicleExteriorColor/White\tordinal=1\n"
    code, out, _ = run(capsys, "lexicon", REFERENCE / "HospitalClasses.h", "--word", "resident")
    assert len(out.splitlines()) == 2
    code, out, _ = run(capsys, "lexicon", REFERENCE / "HospitalClasses.h", "--word", "qqq")
    assert (code, out) == (0, "no entries\n")


def test_infer_text(capsys):
    code, out, _ = run(capsys, "infer", "refused")
    assert code == 0
    ranks = [line.split("\t")[1:3] for line in out.splitlines() if line.startswith("rank")]
    assert ranks == [
        ["applied", "RefusingSomethingDueToFearBehaviorClass"],
        ["applied", "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass"],
        ["match-failure", "RefusingSomethingDueToScheduleConflictBehaviorClass"],
    ]


def test_infer_xml_matches_golden(capsys, tmp_path):
    out_file = tmp_path / "model.xml"
    code, out, _ = run(capsys, "infer", SCENARIOS / "farmer_donkey.xml", "--format", "xml", "--out", out_file)
    assert (code, out) == (0, "")
    assert compare_normalized((GOLDENS / "farmer_donkey.xml").read_text(), out_file.read_text())


def test_emit_xml_from_model_file(capsys):
    code, out, _ = run(capsys, "emit-xml", GOLDENS / "farmer_donkey.xml", CORPUS / "farmer" / "FarmerDonkey.h")
    assert code == 0 and compare_normalized((GOLDENS / "farmer_donkey.xml").read_text(), out)


def test_emit_xml_is_deterministic(capsys):
    outs = [run(capsys, "emit-xml", "hit")[1] for _ in range(2)]
    assert outs[0] == outs[1] and outs[0].startswith("<?xml")


@pytest.mark.parametrize("values,expected", [(["Adjacent"], "2 0 0\n"), (["NotAdjacent"], "1000 0 0\n"),
                                             (["IdenticalLocation"], "0 0 0\n")])
def test_transform(capsys, values, expected):
    code, out, _ = run(capsys, "transform", "RelativePositionSpatialToMillimeterBasedCoords-01", *values)
    assert (code, out) == (0, expected)


def test_transform_verbatim_source(capsys):
    code, out, _ = run(capsys, "transform", "RelativePositionSpatialToMillimeterBasedCoords-01", "Adjacent",
                       "--source", REFERENCE / "TransformVerbatim.h")
    assert (code, out) == (0, "0 0 0\n")


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "transform", "NoSuchTransform", "x")[0] == 1
    assert run(capsys, "compile", tmp_path / "missing.h")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    bad = tmp_path / "bad.xml"
    bad.write_text("<Scenario><Seed")
    assert run(capsys, "infer", bad)[0] == 2
    assert run(capsys, "infer", "farmer_donkey", "--out", tmp_path / "no" / "dir" / "x.txt")[0] == 2


def test_infer_exits_one_when_nothing_applies(capsys, tmp_path):
    text = (SCENARIOS / "farmer_donkey.xml").read_text().replace('verb="beat"', 'verb="zzz"')
    text = text.replace('include="../appendix"', f'include="{APPENDIX}"')
    text = text.replace('file="../farmer/FarmerDonkey.h"', f'file="{CORPUS / "farmer" / "FarmerDonkey.h"}"')
    path = tmp_path / "none.xml"
    path.write_text(text)
    code, out, _ = run(capsys, "infer", path)
    assert code == 1 and "no candidates" in out
