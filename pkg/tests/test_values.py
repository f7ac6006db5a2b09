import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import APPENDIX, REFERENCE, compile_unit
from ross.errors import (
    DivisionByZero,
    MembershipError,
    OrderingError,
    OutOfRange,
    RebindError,
    UnboundVariable,
)
from ross.syntax import ast
from ross.syntax.ast import NIL
from ross.values import (
    IDENTITY_SET,
    NON_SPACE_VALUE,
    SPACE_VALUE,
    Environment,
    ValueSet,
    apply_mapping,
    apply_transform,
    check_membership,
    evaluate,
    successor,
)

TIMES = ValueSet("Timeline", "enum", ordered=True, members=tuple(f"T{i:02d}" for i in range(1, 31)))
COLORS = ValueSet("Colors", "enum", members=("White", "Red", "Space"))

names = st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghij", min_size=1, max_size=6)


@st.composite
def ordered_sets(draw):
    if draw(st.booleans()):
        members = draw(st.lists(names, min_size=1, max_size=12, unique=True))
        return ValueSet("S", "enum", ordered=True, members=tuple(members))
    lo = draw(st.integers(-50, 50))
    return ValueSet("R", "range", lower=lo, upper=lo + draw(st.integers(0, 40)))


@given(ordered_sets(), st.data())
def test_successor_laws(vs, data):
    members = vs.enumerate()
    i = data.draw(st.integers(0, len(members) - 1))
    m = members[i]
    if i + 1 < len(members):
        nxt = successor(m, vs)
        assert vs.index(nxt) == i + 1
        assert vs.compare_key(nxt) > vs.compare_key(m)
    else:
        with pytest.raises(OutOfRange):
            successor(m, vs)
    k = data.draw(st.integers(0, len(members) - 1 - i))
    assert vs.shift(vs.shift(m, k), -k) == m
    assert successor(m, vs, k) == members[i + k]


@given(st.integers(-100, 100), st.integers(0, 60), st.integers(-200, 200))
def test_range_membership_matches_enumeration(lo, width, v):
    vs = ValueSet("R", "range", lower=lo, upper=lo + width)
    assert vs.contains(v) == (v in vs.enumerate())
    assert vs.size() == len(vs.enumerate())


@given(st.lists(names, min_size=1, max_size=10, unique=True), names)
def test_enum_membership_matches_enumeration(members, v):
    vs = ValueSet("E", "enum", members=tuple(members))
    assert vs.contains(v) == (v in list(vs.enumerate()))
    if v in members:
        assert vs.member_at(vs.index(v)) == v


def test_unordered_enum_refuses_successor_but_shifts_implicitly():
    with pytest.raises(OrderingError):
        successor("White", COLORS)
    assert COLORS.shift("White", 1) == "Red"
    with pytest.raises(OrderingError):
        COLORS.shift("White", 1, implicit=False)


def test_nil_is_a_member_of_every_set():
    assert TIMES.contains(NIL) and COLORS.contains(NIL) and IDENTITY_SET.contains(NIL)


def test_membership_tags_space_values():
    assert check_membership("Space", COLORS).category == SPACE_VALUE
    assert check_membership("Red", COLORS).category == NON_SPACE_VALUE
    with pytest.raises(MembershipError):
        check_membership("Purple", COLORS)


def test_ordinal_arithmetic_on_the_timeline():
    env = Environment({"t1$": "T01"})
    expr = ast.Paren(ast.BinOp("+", ast.Var("t1$"), ast.Const(1)))
    assert evaluate(expr, env, TIMES) == "T02"
    with pytest.raises(OutOfRange):
        evaluate(ast.BinOp("+", ast.Const("T30"), ast.Const(1)), None, TIMES)


def test_comparison_needs_order():
    assert evaluate(ast.Compare("<", ast.Const("T01"), ast.Const("T05")), None, TIMES) is True
    with pytest.raises(OrderingError):
        evaluate(ast.Compare("<", ast.Const("White"), ast.Const("Red")), None, COLORS)
    assert evaluate(ast.Compare("!=", ast.Const("White"), ast.Const("Red")), None, COLORS) is True


def test_environment_binds_once():
    env = Environment()
    env.bind("a$", 1)
    with pytest.raises(RebindError):
        env.bind("a$", 2)
    with pytest.raises(UnboundVariable):
        env.get("b$")
    copy = env.copy()
    copy.bind("b$", 2)
    assert "b$" not in env


def test_division():
    assert evaluate(ast.BinOp("/", ast.Const(1000), ast.Const(1000))) == 1
    assert evaluate(ast.BinOp("/", ast.Const(3), ast.Const(2))) == 1.5
    with pytest.raises(DivisionByZero):
        evaluate(ast.BinOp("/", ast.Const(3), ast.Const(0)))


def test_result_outside_target_set():
    small = ValueSet("Small", "range", lower=0, upper=5)
    with pytest.raises(OutOfRange):
        evaluate(ast.BinOp("+", ast.Const(5), ast.Const(1)), None, small)


arith = st.recursive(
    st.integers(-20, 20).map(ast.Const),
    lambda c: st.builds(lambda op, a, b: ast.Paren(ast.BinOp(op, a, b)), st.sampled_from("+-*"), c, c),
    max_leaves=10,
)


def _oracle(e):
    if isinstance(e, ast.Const):
        return e.value
    if isinstance(e, ast.Paren):
        return _oracle(e.inner)
    a, b = _oracle(e.left), _oracle(e.right)
    return {"+": a + b, "-": a - b, "*": a * b}[e.op]


@given(arith)
def test_integer_arithmetic_matches_python(expr):
    assert evaluate(expr) == _oracle(expr)


@given(st.integers(0, 29), st.integers(0, 29))
def test_timeline_comparison_matches_index_order(i, j):
    a, b = TIMES.members[i], TIMES.members[j]
    assert evaluate(ast.Compare("<", ast.Const(a), ast.Const(b)), None, TIMES) == (i < j)
    assume(i + j < 30)
    assert evaluate(ast.BinOp("+", ast.Const(a), ast.Const(j)), None, TIMES) == TIMES.members[i + j]


def test_millimeter_to_meter():
    info = compile_unit(REFERENCE / "Declarations.h")
    assert apply_mapping(info.mapping("MillimeterToMeter"), 1000) == 1


@pytest.mark.parametrize("source,dest", [
    ("Adjacent", [2, 0, 0]),
    ("NotAdjacent", [1000, 0, 0]),
    ("IdenticalLocation", [0, 0, 0]),
])
def test_relative_position_transform(source, dest):
    info = compile_unit(APPENDIX / "Transforms.h")
    t = info.transform("RelativePositionSpatialToMillimeterBasedCoords-01")
    out = apply_transform(t, {t.source_types[0]: source})
    assert [out[n] for n in t.dest_types] == dest
