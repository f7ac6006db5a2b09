import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import INCLUDES, fixture_files
from ross.errors import IncludeError, LexError, ParseError
from ross.syntax import ast, parse_attribute_base_expression, parse_file, parse_text, pretty_print, tokenize
from ross.syntax.printer import format_attribute_base


@pytest.mark.parametrize("path", fixture_files(), ids=lambda p: f"{p.parent.name}/{p.name}")
def test_fixture_round_trip(path):
    statements = parse_file(path, INCLUDES)
    assert statements
    again = parse_text(pretty_print(statements))
    assert again == statements


def test_pretty_print_is_a_fixed_point():
    statements = parse_file(fixture_files()[0], INCLUDES)
    once = pretty_print(statements)
    assert pretty_print(parse_text(once)) == once


def test_value_set_statement():
    (vs,) = parse_text('ValueSet "Colors" ( { "Red", "Green" } );')
    assert vs.name == "Colors"
    assert pretty_print([vs]).count("Red") == 1


def test_comments_are_ignored():
    a = parse_text('// note\nInteger n = 3; /* block */')
    b = parse_text("Integer n = 3;")
    assert a == b


def test_unclosed_parenthesis_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_text('ValueSet "Colors" ( { "Red", "Green" } ;')


def test_bad_character_is_a_lex_error():
    with pytest.raises((LexError, ParseError)):
        parse_text("Integer n = 3 @;")


def test_missing_include():
    with pytest.raises(IncludeError):
        parse_text("#include <NoSuchFile.h>\n", include_resolver=lambda name: (_ for _ in ()).throw(LookupError(name)))


def _attribute(text: str) -> ast.AttributeBase:
    return parse_attribute_base_expression(tokenize(text))


def test_attribute_forms():
    assert _attribute("<Attribute ref = T val = \"450\" />").kind == "val"
    r = _attribute("<Attribute ref = T range = {10 .. 800} />")
    assert (r.kind, r.value.lower, r.value.upper) == ("range", 10, 800)
    v = _attribute("<Attribute ref = T var = x$ />")
    assert (v.kind, v.value) == ("var", "x$")
    e = _attribute("<Attribute ref = T expr = (x$ + 1) />")
    assert e.value == ast.Paren(ast.BinOp("+", ast.Var("x$"), ast.Const(1)))


leaves = st.one_of(
    st.integers(min_value=0, max_value=10**6).map(ast.Const),
    st.sampled_from(["a$", "t1$", "x$", "extra$"]).map(ast.Var),
)


def _binop(children):
    return st.builds(lambda op, left, right: ast.BinOp(op, ast.Paren(left), ast.Paren(right)),
                     st.sampled_from("+-*/"), children, children)


expressions = st.recursive(leaves, _binop, max_leaves=8)


@given(expressions)
def test_expression_round_trip(expr):
    base = ast.AttributeBase("T", "expr", ast.Paren(expr))
    assert _attribute(format_attribute_base(base)) == base
