"""Recursive-descent parser for Star compilation units."""

from __future__ import annotations

from typing import Callable

from ross.errors import IncludeError, ParseError, Position
from ross.syntax import ast
from ross.syntax.lexer import Token, TokenKind, tokenize

XML_KEYS = frozenset({"ref", "val", "expr", "var", "range", "routine", "bitmap", "type", "name"})

IncludeResolver = Callable[[str], "tuple[str, str]"]


class XmlEl:
    """A parsed ``<Tag key = value ... />`` element before it is folded into a node."""

    __slots__ = ("tag", "entries", "pos")

    def __init__(self, tag: str, entries: dict, pos: Position):
        self.tag = tag
        self.entries = entries
        self.pos = pos

    def get(self, key: str, default=None):
        return self.entries.get(key, default)


class Parser:
    def __init__(self, tokens: list[Token], include_resolver: IncludeResolver | None = None,
                 included: set[str] | None = None):
        self.tokens = tokens
        self.i = 0
        self.include_resolver = include_resolver
        self.included = included if included is not None else set()
        self._opens: list[tuple[Token, str]] = []

    # token helpers

    def peek(self, k: int = 0) -> Token:
        j = min(self.i + k, len(self.tokens) - 1)
        return self.tokens[j]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind is not TokenKind.EOF:
            self.i += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, tok.pos)

    def describe(self, tok: Token) -> str:
        if tok.kind is TokenKind.EOF:
            return "end of input"
        if tok.kind is TokenKind.STRING:
            return f'"{tok.text}"'
        return repr(tok.text)

    def accept(self, text: str) -> Token | None:
        tok = self.peek()
        if tok.is_punct(text):
            return self.advance()
        return None

    def expect(self, text: str, what: str) -> Token:
        tok = self.peek()
        if not tok.is_punct(text):
            raise self.error(f"expected {text!r} {what}, found {self.describe(tok)}")
        return self.advance()

    def at_word(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind in (TokenKind.IDENT, TokenKind.KEYWORD) and tok.text in words

    def expect_word(self, word: str, what: str) -> Token:
        if not self.at_word(word):
            raise self.error(f"expected {word!r} {what}, found {self.describe(self.peek())}")
        return self.advance()

    def expect_kind(self, kind: TokenKind, what: str) -> Token:
        tok = self.peek()
        if tok.kind is not kind:
            raise self.error(f"expected {kind.value} {what}, found {self.describe(tok)}")
        return self.advance()

    def name_token(self, what: str) -> Token:
        tok = self.peek()
        if tok.kind not in (TokenKind.IDENT, TokenKind.KEYWORD):
            raise self.error(f"expected identifier {what}, found {self.describe(tok)}")
        return self.advance()

    def skip_semi(self) -> None:
        while self.peek().is_punct(";"):
            self.advance()

    def open(self, punct: str, construct: str) -> Token:
        tok = self.expect(punct, f"to open {construct}")
        self._opens.append((tok, construct))
        return tok

    def close(self, punct: str) -> Token:
        opener, construct = self._opens[-1]
        tok = self.peek()
        if not tok.is_punct(punct):
            raise self.error(
                f"unbalanced delimiter: expected {punct!r} to close {construct} opened at "
                f"{opener.pos.line}:{opener.pos.col}, found {self.describe(tok)}"
            )
        self._opens.pop()
        return self.advance()

    def at_close(self, punct: str = ")") -> bool:
        tok = self.peek()
        if tok.kind is TokenKind.EOF:
            opener, construct = self._opens[-1]
            raise self.error(
                f"unbalanced delimiter: {construct} opened at {opener.pos.line}:{opener.pos.col} "
                f"is never closed"
            )
        return tok.is_punct(punct)

    # compilation units

    def compilation_unit(self) -> list[ast.Statement]:
        statements: list[ast.Statement] = []
        while self.peek().kind is not TokenKind.EOF:
            tok = self.peek()
            if tok.kind is TokenKind.INCLUDE:
                self.advance()
                statements.extend(self.include(tok))
                continue
            if tok.is_punct(";"):
                self.advance()
                continue
            statements.append(self.statement())
        return statements

    def include(self, tok: Token) -> list[ast.Statement]:
        name = tok.text
        if name in self.included:
            return []
        if self.include_resolver is None:
            raise IncludeError(f"no include resolver for <{name}>", tok.pos)
        self.included.add(name)
        try:
            file, text = self.include_resolver(name)
        except (OSError, LookupError) as exc:
            raise IncludeError(f"cannot include <{name}>: {exc}", tok.pos) from None
        sub = Parser(tokenize(text, file), self.include_resolver, self.included)
        return sub.compilation_unit()

    def statement(self) -> ast.Statement:
        tok = self.peek()
        handler = _STATEMENTS.get(tok.text) if tok.kind is TokenKind.KEYWORD else None
        if handler is None:
            if tok.kind in (TokenKind.IDENT, TokenKind.KEYWORD):
                raise self.error(f"unknown keyword {tok.text!r}")
            raise self.error(f"expected a statement, found {self.describe(tok)}")
        return handler(self)

    # XML elements

    def xml_element(self, allowed: dict[str, frozenset[str]], construct: str) -> XmlEl:
        lt = self.expect("<", "to open an XML element")
        tag_tok = self.name_token("as XML element tag")
        tag = tag_tok.text
        if tag not in allowed:
            raise ParseError(f"unexpected XML element <{tag}> in {construct}", tag_tok.pos)
        entries: dict = {}
        while not self.peek().is_punct("/>"):
            key_tok = self.peek()
            if key_tok.kind is TokenKind.EOF or key_tok.is_punct(">"):
                raise self.error(f"unterminated XML element <{tag}>: expected '/>'")
            if key_tok.kind not in (TokenKind.IDENT, TokenKind.KEYWORD) or key_tok.text not in XML_KEYS:
                raise self.error(f"unknown XML-element key {key_tok.text!r} in <{tag}>")
            key = key_tok.text
            if key not in allowed[tag]:
                raise self.error(f"key {key!r} is not allowed in <{tag}>")
            if key in entries:
                raise self.error(f"duplicate key {key!r} in <{tag}>")
            self.advance()
            self.expect("=", f"after key {key!r}")
            entries[key] = self.xml_value(key)
        self.advance()
        return XmlEl(tag, entries, lt.pos)

    def xml_value(self, key: str):
        tok = self.peek()
        if key == "ref":
            return self.name_token("as reference").text
        if key == "val":
            if tok.kind is TokenKind.STRING:
                self.advance()
                return ast.NIL if tok.text == "nil" else tok.text
            if tok.kind is TokenKind.NIL:
                self.advance()
                return ast.NIL
            if tok.kind in (TokenKind.INT, TokenKind.FLOAT) or tok.is_punct("-"):
                return self.signed_number()
            if tok.kind is TokenKind.IDENT:
                self.advance()
                return tok.text
            raise self.error(f"expected a value after 'val =', found {self.describe(tok)}")
        if key == "expr":
            return self.expr_value()
        if key == "var":
            return self.expect_kind(TokenKind.VAR, "after 'var ='").text
        if key == "range":
            return self.value_range()
        return self.expect_kind(TokenKind.STRING, f"after '{key} ='").text

    def collect_flags(self, els: list[XmlEl], construct: str) -> dict[str, XmlEl]:
        seen: dict[str, XmlEl] = {}
        for el in els:
            if el.tag in seen:
                raise ParseError(f"duplicate XML element <{el.tag}> in {construct}", el.pos)
            seen[el.tag] = el
        return seen

    def boolean(self, el: XmlEl | None) -> bool | None:
        if el is None:
            return None
        val = el.get("val")
        if val == "true":
            return True
        if val == "false":
            return False
        raise ParseError(f"<{el.tag}> expects val = \"true\" or \"false\"", el.pos)

    # expressions

    def signed_number(self) -> int | float:
        neg = self.accept("-") is not None
        tok = self.peek()
        if tok.kind is TokenKind.INT:
            self.advance()
            v: int | float = int(tok.text)
        elif tok.kind is TokenKind.FLOAT:
            self.advance()
            v = float(tok.text)
        else:
            raise self.error(f"expected a number, found {self.describe(tok)}")
        return -v if neg else v

    def expr_value(self) -> ast.Expr:
        if self.peek().is_punct("("):
            return self.paren_expr(allow_compare=True)
        return self.factor()

    def paren_expr(self, allow_compare: bool) -> ast.Paren:
        lp = self.open("(", "parenthesized expression")
        inner = self.arith()
        tok = self.peek()
        if tok.kind is TokenKind.PUNCT and tok.text in ast.COMPARE_OPS:
            if not allow_compare:
                raise self.error("comparison not allowed inside an arithmetic operand")
            self.advance()
            inner = ast.Compare(tok.text, inner, self.arith(), pos=tok.pos)
        self.close(")")
        return ast.Paren(inner, pos=lp.pos)

    def arith(self) -> ast.Expr:
        left = self.term()
        while self.peek().kind is TokenKind.PUNCT and self.peek().text in ("+", "-"):
            op = self.advance()
            left = ast.BinOp(op.text, left, self.term(), pos=op.pos)
        return left

    def term(self) -> ast.Expr:
        left = self.factor()
        while self.peek().kind is TokenKind.PUNCT and self.peek().text in ("*", "/"):
            op = self.advance()
            left = ast.BinOp(op.text, left, self.factor(), pos=op.pos)
        return left

    def factor(self) -> ast.Expr:
        tok = self.peek()
        if tok.kind is TokenKind.VAR:
            self.advance()
            return ast.Var(tok.text, pos=tok.pos)
        if tok.kind in (TokenKind.INT, TokenKind.FLOAT) or tok.is_punct("-"):
            return ast.Const(self.signed_number(), pos=tok.pos)
        if tok.kind is TokenKind.STRING:
            self.advance()
            return ast.Const(tok.text, pos=tok.pos)
        if tok.is_punct("("):
            return self.paren_expr(allow_compare=False)
        raise self.error(f"expected an expression operand, found {self.describe(tok)}")

    def bound(self) -> ast.Bound:
        tok = self.peek()
        if tok.kind is TokenKind.IDENT:
            self.advance()
            return tok.text
        v = self.signed_number()
        if not isinstance(v, int):
            raise ParseError("value-set bounds must be integers", tok.pos)
        return v

    def value_range(self) -> ast.ValueRange:
        lb = self.open("{", "value range")
        lower = self.bound()
        self.accept(",")
        self.expect("..", "in value range")
        upper = self.bound()
        self.close("}")
        return ast.ValueRange(lower, upper, pos=lb.pos)

    # dictionaries

    def dictionary_clause(self) -> tuple[ast.DictionarySection, ...]:
        kw = self.advance()
        kind = kw.text
        self.open("(", kind)
        noun = None
        langs: list[tuple[str, tuple[str, ...], Position]] = []
        while not self.at_close(")"):
            if self.peek().is_punct("<"):
                el = self.xml_element(_DICT_FLAGS, kind)
                if noun is not None:
                    raise ParseError(f"duplicate XML element <{el.tag}> in {kind}", el.pos)
                noun = self.boolean(el)
                continue
            lang = self.name_token("as dictionary language")
            self.open("(", f"{lang.text} word list")
            self.open("{", f"{lang.text} word list")
            words: list[str] = []
            while not self.at_close("}"):
                words.append(self.expect_kind(TokenKind.STRING, "in word list").text)
                if not self.accept(","):
                    break
            self.close("}")
            self.close(")")
            self.skip_semi()
            langs.append((lang.text, tuple(words), lang.pos))
        self.close(")")
        self.skip_semi()
        if not langs:
            raise self.error(f"{kind} needs at least one language word list", kw)
        return tuple(ast.DictionarySection(kind, lang, words, noun, pos=p) for lang, words, p in langs)

    # value sets

    def value_set_stmt(self) -> ast.ValueSetStmt:
        self.expect_word("ValueSet", "")
        return self.value_set_named()

    def value_set_named(self) -> ast.ValueSetStmt:
        name = self.expect_kind(TokenKind.STRING, "as value set name")
        vs = self.value_set_body(name.text, name.pos)
        self.skip_semi()
        return vs

    def value_set_body(self, name: str, pos: Position) -> ast.ValueSetStmt:
        construct = f'value set "{name}"'
        self.open("(", construct)
        tok = self.peek()
        if tok.kind is TokenKind.IDENT and self.peek(1).is_punct(")"):
            self.advance()
            self.close(")")
            if tok.text in ast.CONSTANT_SET_NAMES:
                content: ast.SetContent = ast.ConstantSetName(tok.text, pos=tok.pos)
            else:
                content = ast.RenameSet(tok.text, pos=tok.pos)
            return ast.ValueSetStmt(name, content, pos=pos)
        els: list[XmlEl] = []
        content = None
        while not self.at_close(")"):
            if self.peek().is_punct("<"):
                els.append(self.xml_element(_VALUE_SET_FLAGS, construct))
            elif self.peek().is_punct("{"):
                if content is not None:
                    raise self.error(f"{construct} has more than one value depiction")
                content = self.set_depiction()
                self.skip_semi()
            else:
                raise self.error(f"unexpected {self.describe(self.peek())} in {construct}")
        self.close(")")
        if content is None:
            raise self.error(f"{construct} has no value depiction")
        flags = self.collect_flags(els, construct)
        return ast.ValueSetStmt(
            name,
            content,
            base=flags["BaseValueSet"].get("ref") if "BaseValueSet" in flags else None,
            usage=flags["SuperTypeUsage"].get("val") if "SuperTypeUsage" in flags else None,
            ordered=self.boolean(flags.get("OrderedCollection")),
            pos=pos,
        )

    def set_depiction(self) -> ast.SetContent:
        tok = self.peek()
        nxt = self.peek(1)
        if not (tok.is_punct("{") and (nxt.kind is TokenKind.STRING or nxt.is_punct("}"))):
            return ast.RangeContent(self.value_range(), pos=tok.pos)
        self.open("{", "enumerated values")
        entries: list[ast.EnumEntry] = []
        while not self.at_close("}"):
            val = self.expect_kind(TokenKind.STRING, "as enumerated value")
            dicts: tuple[ast.DictionarySection, ...] = ()
            if self.accept(":"):
                found: list[ast.DictionarySection] = []
                while self.at_word(*ast.DICTIONARY_KINDS):
                    found.extend(self.dictionary_clause())
                if not found:
                    raise self.error(f'expected a dictionary after "{val.text}":')
                dicts = tuple(found)
            entries.append(ast.EnumEntry(val.text, dicts, pos=val.pos))
            while self.peek().is_punct(",") or self.peek().is_punct(";"):
                self.advance()
        self.close("}")
        return ast.EnumContent(tuple(entries), pos=tok.pos)

    # simple declarations

    def integer_decl(self) -> ast.IntegerDecl:
        kw = self.advance()
        name = self.name_token("as integer constant name")
        self.expect("=", "in integer declaration")
        tok = self.peek()
        v = self.signed_number()
        if not isinstance(v, int):
            raise ParseError("integer declaration needs an integer value", tok.pos)
        self.expect(";", "after integer declaration")
        return ast.IntegerDecl(name.text, v, pos=kw.pos)

    def float_decl(self) -> ast.FloatDecl:
        kw = self.advance()
        name = self.name_token("as floating point constant name")
        self.expect("=", "in floating point declaration")
        v = self.signed_number()
        self.expect(";", "after floating point declaration")
        return ast.FloatDecl(name.text, float(v), pos=kw.pos)

    def string_decl(self) -> ast.StringDecl:
        kw = self.advance()
        name = self.name_token("as string constant name")
        self.expect("=", "in string declaration")
        v = self.expect_kind(TokenKind.STRING, "in string declaration")
        self.expect(";", "after string declaration")
        return ast.StringDecl(name.text, v.text, pos=kw.pos)

    # mapping and transform

    def mapping_stmt(self) -> ast.MappingStmt:
        kw = self.advance()
        name = self.expect_kind(TokenKind.STRING, "as mapping name")
        construct = f'Mapping "{name.text}"'
        self.open("(", construct)
        els = []
        while not self.at_close(")"):
            els.append(self.xml_element(_MAPPING_FLAGS, construct))
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        for tag in ("Source", "Dest", "Function"):
            if tag not in flags:
                raise ParseError(f"{construct} is missing <{tag}>", kw.pos)
        return ast.MappingStmt(name.text, flags["Source"].get("ref"), flags["Dest"].get("ref"),
                               flags["Function"].get("expr"), pos=kw.pos)

    def transform_stmt(self) -> ast.TransformStmt:
        kw = self.advance()
        name = self.expect_kind(TokenKind.STRING, "as transform name")
        construct = f'Transform "{name.text}"'
        closer = "}" if self.peek().is_punct("{") else ")"
        self.open("{" if closer == "}" else "(", construct)
        els = []
        routine = None
        while not self.at_close(closer):
            if self.peek().is_punct("<"):
                els.append(self.xml_element(_TRANSFORM_FLAGS, construct))
            elif routine is None:
                routine = self.routine()
            else:
                raise self.error(f"unexpected {self.describe(self.peek())} in {construct}")
        self.close(closer)
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        if routine is None:
            raise ParseError(f"{construct} has no routine", kw.pos)
        for tag in ("Source", "Dest"):
            if tag not in flags:
                raise ParseError(f"{construct} is missing <{tag}>", kw.pos)
        return ast.TransformStmt(name.text, flags["Source"].get("ref"), flags["Dest"].get("ref"),
                                 routine, pos=kw.pos)

    def routine(self) -> ast.RoutineBody:
        start = self.expect_word("bool", "as routine return type")
        self.expect_word("Routine", "after 'bool'")
        self.open("{", "routine body")
        self.expect_word("Parameters", "in routine")
        self.open("(", "routine parameters")
        params: list[ast.Param] = []
        while not self.at_close(")"):
            ptype = self.peek()
            if not self.at_word("string", "int"):
                raise self.error(f"expected parameter type 'string' or 'int', found {self.describe(ptype)}")
            self.advance()
            pname = self.name_token("as parameter name")
            length = None
            if self.accept("["):
                length = self.expect_kind(TokenKind.INT, "as array length")
                length = int(length.text)
                self.expect("]", "after array length")
            self.expect(";", "after parameter")
            params.append(ast.Param(ptype.text, pname.text, length, pos=ptype.pos))
        self.close(")")
        self.skip_semi()
        self.expect_word("Locals", "in routine")
        self.open("(", "routine locals")
        locals_: list[ast.Local] = []
        while not self.at_close(")"):
            ltype = self.expect_word("int", "as local type")
            lname = self.name_token("as local name")
            self.expect("=", "in local declaration")
            tok = self.peek()
            init = self.signed_number()
            if not isinstance(init, int):
                raise ParseError("locals must be integers", tok.pos)
            self.expect(";", "after local declaration")
            locals_.append(ast.Local(lname.text, init, pos=ltype.pos))
        self.close(")")
        self.skip_semi()
        body = self.routine_block_items("}")
        self.close("}")
        self.skip_semi()
        return ast.RoutineBody(tuple(params), tuple(locals_), body, pos=start.pos)

    def routine_block_items(self, closer: str) -> tuple:
        items = []
        while not self.at_close(closer):
            items.append(self.routine_stmt())
        return tuple(items)

    def routine_block(self) -> tuple:
        self.open("{", "routine block")
        items = self.routine_block_items("}")
        self.close("}")
        return items

    def routine_cond(self) -> ast.StrEquals:
        self.open("(", "condition")
        name = self.name_token("in condition")
        self.expect("==", "in condition")
        lit = self.expect_kind(TokenKind.STRING, "in condition")
        self.close(")")
        return ast.StrEquals(name.text, lit.text, pos=name.pos)

    def routine_stmt(self):
        tok = self.peek()
        if self.at_word("if"):
            self.advance()
            branches = [(self.routine_cond(), self.routine_block())]
            otherwise = None
            while self.at_word("else"):
                self.advance()
                if self.at_word("if"):
                    self.advance()
                    branches.append((self.routine_cond(), self.routine_block()))
                else:
                    otherwise = self.routine_block()
                    break
            return ast.IfChain(tuple(branches), otherwise, pos=tok.pos)
        if self.at_word("Return", "return"):
            self.advance()
            val = self.peek()
            if not self.at_word("true", "false"):
                raise self.error(f"expected true or false after Return, found {self.describe(val)}")
            self.advance()
            self.expect(";", "after Return")
            return ast.ReturnStmt(val.text == "true", pos=tok.pos)
        if tok.kind is TokenKind.IDENT:
            self.advance()
            self.expect("[", "for array assignment")
            idx_tok = self.peek()
            if idx_tok.kind is TokenKind.INT:
                index: int | str = int(idx_tok.text)
            elif idx_tok.kind is TokenKind.IDENT:
                index = idx_tok.text
            else:
                raise self.error(f"expected array index, found {self.describe(idx_tok)}")
            self.advance()
            self.expect("]", "after array index")
            self.expect("=", "in array assignment")
            vtok = self.peek()
            value = self.signed_number()
            if not isinstance(value, int):
                raise ParseError("routine assignments take integer values", vtok.pos)
            self.expect(";", "after assignment")
            return ast.ArrayAssign(tok.text, index, value, pos=tok.pos)
        raise self.error(f"unexpected {self.describe(tok)} in routine")

    # attribute types and attributes

    def attribute_type_stmt(self) -> ast.AttributeTypeStmt:
        self.expect_word("AttributeType", "")
        return self.attribute_type_named()

    def attribute_type_named(self) -> ast.AttributeTypeStmt:
        name = self.expect_kind(TokenKind.STRING, "as attribute type name")
        construct = f'attribute type "{name.text}"'
        self.open("(", construct)
        els: list[XmlEl] = []
        value_set = None
        while not self.at_close(")"):
            tok = self.peek()
            if tok.is_punct("<"):
                els.append(self.xml_element(_ATTRIBUTE_TYPE_FLAGS, construct))
            elif tok.kind is TokenKind.STRING or self.at_word("ValueSet"):
                if value_set is not None:
                    raise self.error(f"{construct} has more than one value set")
                if self.at_word("ValueSet"):
                    self.advance()
                value_set = self.value_set_named()
            else:
                raise self.error(f"unexpected {self.describe(tok)} in {construct}")
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        ref = flags["ValueSetName"].get("ref") if "ValueSetName" in flags else None
        if ref is not None and value_set is not None:
            raise ParseError(f"{construct} has both a value set reference and an inline value set", name.pos)
        if ref is None and value_set is None:
            raise ParseError(f"{construct} has no value set", name.pos)
        return ast.AttributeTypeStmt(
            name.text,
            super_type=flags["SuperType"].get("val") if "SuperType" in flags else None,
            state=self.boolean(flags.get("StateAttributeType")),
            optional_causal=self.boolean(flags.get("OptionalCausalFeature")),
            probability=flags["Probability"].get("expr") if "Probability" in flags else None,
            value_set_ref=ref,
            value_set=value_set,
            pos=name.pos,
        )

    def attribute_base(self, construct: str) -> ast.AttributeBase:
        el = self.xml_element(_ATTRIBUTE_BASE, construct)
        return self.fold_attribute_base(el)

    def fold_attribute_base(self, el: XmlEl) -> ast.AttributeBase:
        ref = el.get("ref")
        if ref is None:
            raise ParseError("<Attribute> needs a ref", el.pos)
        kinds = [k for k in ast.ATTRIBUTE_VALUE_KINDS if k in el.entries]
        if len(kinds) != 1:
            raise ParseError(f"<Attribute ref = {ref}> needs exactly one value form, found {len(kinds)}", el.pos)
        return ast.AttributeBase(ref, kinds[0], el.entries[kinds[0]], pos=el.pos)

    def attribute_stmt(self) -> ast.AttributeStmt:
        self.expect_word("Attribute", "")
        name = self.expect_kind(TokenKind.STRING, "as attribute name")
        construct = f'attribute "{name.text}"'
        self.open("(", construct)
        els = []
        while not self.at_close(")"):
            els.append(self.xml_element(_ATTRIBUTE_FLAGS, construct))
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        if "Attribute" not in flags:
            raise ParseError(f"{construct} has no attribute base expression", name.pos)
        return ast.AttributeStmt(
            name.text,
            self.fold_attribute_base(flags["Attribute"]),
            probability=flags["Probability"].get("expr") if "Probability" in flags else None,
            pos=name.pos,
        )

    # dimension and specification systems

    def dimension_system_stmt(self) -> ast.DimensionSystemStmt:
        self.expect_word("DimensionSystem", "")
        name = self.expect_kind(TokenKind.STRING, "as dimension system name")
        construct = f'dimension system "{name.text}"'
        self.open("(", construct)
        tok = self.peek()
        if tok.kind is TokenKind.IDENT and self.peek(1).is_punct(")"):
            self.advance()
            self.close(")")
            self.skip_semi()
            return ast.DimensionSystemStmt(name.text, rename=tok.text, pos=name.pos)
        if self.at_word("Merge"):
            self.advance()
            self.open("(", "Merge")
            parts = [self.name_token("in Merge").text]
            while self.accept(","):
                parts.append(self.name_token("in Merge").text)
            self.close(")")
            self.skip_semi()
            self.close(")")
            self.skip_semi()
            return ast.DimensionSystemStmt(name.text, merge=tuple(parts), pos=name.pos)
        els = []
        spatial = temporal = None
        seen_groups = False
        while not self.at_close(")"):
            if self.peek().is_punct("<"):
                els.append(self.xml_element(_DIMENSION_SYSTEM_FLAGS, construct))
            elif self.at_word("LocationAttributeTypes") and not seen_groups:
                seen_groups = True
                self.advance()
                self.open("(", "LocationAttributeTypes")
                if self.at_word("SpatialAttributeTypes"):
                    self.advance()
                    spatial = self.member_list("SpatialAttributeTypes")
                if self.at_word("TemporalAttributeTypes"):
                    self.advance()
                    temporal = self.member_list("TemporalAttributeTypes")
                self.close(")")
                self.skip_semi()
            else:
                raise self.error(f"unexpected {self.describe(self.peek())} in {construct}")
        self.close(")")
        self.skip_semi()
        if not seen_groups:
            raise ParseError(f"{construct} has no LocationAttributeTypes section", name.pos)
        flags = self.collect_flags(els, construct)
        return ast.DimensionSystemStmt(
            name.text,
            role_trait=flags["RoleTrait"].get("val") if "RoleTrait" in flags else None,
            spatial=spatial,
            temporal=temporal,
            pos=name.pos,
        )

    def member_list(self, construct: str) -> tuple:
        self.open("(", construct)
        members = []
        while not self.at_close(")"):
            tok = self.peek()
            if self.at_word("AttributeType"):
                members.append(self.attribute_type_stmt())
            elif tok.kind is TokenKind.IDENT:
                self.advance()
                members.append(ast.AttributeTypeRef(tok.text, pos=tok.pos))
                while self.peek().is_punct(";") or self.peek().is_punct(","):
                    self.advance()
            elif tok.kind is TokenKind.STRING:
                if (self.peek(1).is_punct("(") and self.peek(2).kind is TokenKind.IDENT
                        and self.peek(3).is_punct(")")):
                    self.advance()
                    self.advance()
                    target = self.advance()
                    self.advance()
                    self.skip_semi()
                    members.append(ast.AttributeTypeAlias(tok.text, target.text, pos=tok.pos))
                else:
                    members.append(self.attribute_type_named())
            else:
                raise self.error(f"unexpected {self.describe(tok)} in {construct}")
        self.close(")")
        self.skip_semi()
        return tuple(members)

    def spec_system_stmt(self) -> ast.SpecificationSystemStmt:
        self.expect_word("SpecificationSystem", "")
        name = self.expect_kind(TokenKind.STRING, "as specification system name")
        construct = f'specification system "{name.text}"'
        self.open("(", construct)
        ds = self.dimension_system_stmt()
        quality: tuple = ()
        if self.at_word("InnerContent"):
            self.advance()
            self.open("(", "InnerContent")
            if self.at_word("QualityAttributeTypes"):
                self.advance()
                quality = self.member_list("QualityAttributeTypes")
            self.close(")")
            self.skip_semi()
        self.close(")")
        self.skip_semi()
        return ast.SpecificationSystemStmt(name.text, ds, quality, pos=name.pos)

    # object frame classes

    def name_list(self, construct: str) -> tuple[str, ...]:
        self.open("(", construct)
        names: list[str] = []
        if self.peek().is_punct("{"):
            self.open("{", construct)
            while not self.at_close("}"):
                tok = self.peek()
                if tok.kind not in (TokenKind.STRING, TokenKind.IDENT):
                    raise self.error(f"expected class name in {construct}, found {self.describe(tok)}")
                self.advance()
                names.append(tok.text)
                if not self.accept(","):
                    break
            self.close("}")
            self.skip_semi()
        self.close(")")
        self.skip_semi()
        return tuple(names)

    def empty_section(self, construct: str) -> tuple:
        self.open("(", construct)
        if not self.at_close(")"):
            raise self.error(f"{construct} section must be empty")
        self.close(")")
        self.skip_semi()
        return ()

    def dimension_set(self, kind: str) -> ast.DimensionSet:
        kw = self.advance()
        self.open("(", kind)
        els = []
        attrs = []
        while not self.at_close(")"):
            el = self.xml_element(_DIMENSION_SET_FLAGS, kind)
            if el.tag == "Attribute":
                attrs.append(self.fold_attribute_base(el))
            else:
                els.append(el)
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, kind)
        if "DimensionSystem" not in flags:
            raise ParseError(f"{kind} needs a <DimensionSystem ref = .../>", kw.pos)
        anchor = None
        if "AnchorPoint" in flags:
            a = flags["AnchorPoint"]
            anchor = ast.AnchorPoint(a.get("type"), a.get("val"), pos=a.pos)
        return ast.DimensionSet(
            kind,
            flags["DimensionSystem"].get("ref"),
            tuple(attrs),
            dimension_system_type=flags["DimensionSystemType"].get("val") if "DimensionSystemType" in flags else None,
            anchor=anchor,
            pos=kw.pos,
        )

    def relationship_to_parent(self, word: str = "RelationshipToParent") -> ast.RelationshipToParent:
        kw = self.tokens[self.i - 1]
        self.open("(", "RelationshipToParent")
        at = orient = ext = None
        while not self.at_close(")"):
            tok = self.peek()
            if self.at_word("AtLocations") and at is None:
                self.advance()
                self.open("(", "AtLocations")
                sets = []
                while not self.at_close(")"):
                    if not self.at_word("AtLocationSet"):
                        raise self.error(f"expected AtLocationSet, found {self.describe(self.peek())}")
                    sets.append(self.dimension_set("AtLocationSet"))
                self.close(")")
                self.skip_semi()
                at = tuple(sets)
            elif self.at_word("OrientationSpecifiers") and orient is None:
                self.advance()
                orient = self.empty_section("OrientationSpecifiers")
            elif self.at_word("OuterDimensionSystemExtents") and ext is None:
                self.advance()
                self.open("(", "OuterDimensionSystemExtents")
                sets = []
                while not self.at_close(")"):
                    if not self.at_word("OuterDimensionSystemExtentSet"):
                        raise self.error(
                            f"expected OuterDimensionSystemExtentSet, found {self.describe(self.peek())}")
                    sets.append(self.dimension_set("OuterDimensionSystemExtentSet"))
                self.close(")")
                self.skip_semi()
                ext = tuple(sets)
            else:
                raise self.error(f"unexpected {self.describe(tok)} in RelationshipToParent")
        self.close(")")
        self.skip_semi()
        return ast.RelationshipToParent(at, orient, ext, pos=kw.pos)

    def designators(self, construct: str) -> tuple[ast.BehaviorDesignator, ...]:
        self.open("(", construct)
        out = []
        while not self.at_close(")"):
            kw = self.expect_word("BehaviorClassDesignator", f"in {construct}")
            self.open("(", "BehaviorClassDesignator")
            els = []
            while not self.at_close(")"):
                els.append(self.xml_element(_DESIGNATOR_FLAGS, "BehaviorClassDesignator"))
            self.close(")")
            self.skip_semi()
            flags = self.collect_flags(els, "BehaviorClassDesignator")
            if "BehaviorClassName" not in flags:
                raise ParseError("BehaviorClassDesignator needs <BehaviorClassName>", kw.pos)
            out.append(ast.BehaviorDesignator(
                flags["BehaviorClassName"].get("val"),
                flags["Probability"].get("expr") if "Probability" in flags else None,
                pos=kw.pos,
            ))
        self.close(")")
        self.skip_semi()
        return tuple(out)

    def statement_list(self, construct: str, keyword: str, handler) -> tuple:
        self.open("(", construct)
        out = []
        while not self.at_close(")"):
            if not self.at_word(keyword):
                raise self.error(f"expected {keyword!r} in {construct}, found {self.describe(self.peek())}")
            out.append(handler(self))
        self.close(")")
        self.skip_semi()
        return tuple(out)

    def object_frame_class_stmt(self) -> ast.ObjectFrameClassStmt:
        self.expect_word("ObjectFrameClass", "")
        name = self.expect_kind(TokenKind.STRING, "as object frame class name")
        construct = f'object frame class "{name.text}"'
        self.open("(", construct)
        els: list[XmlEl] = []
        fields: dict = {}
        dictionaries: list[ast.DictionarySection] = []
        last = -1
        while not self.at_close(")"):
            tok = self.peek()
            if tok.is_punct("<"):
                els.append(self.xml_element(_OFC_FLAGS, construct))
                continue
            if tok.kind not in (TokenKind.IDENT, TokenKind.KEYWORD) or tok.text not in _OFC_SECTIONS:
                raise self.error(f"unexpected {self.describe(tok)} in {construct}")
            rank, field_name, handler = _OFC_SECTIONS[tok.text]
            if rank <= last:
                raise self.error(f"section {tok.text} is duplicated or out of order in {construct}")
            last = rank
            if field_name == "dictionaries":
                dictionaries.extend(self.dictionary_clause())
            else:
                self.advance()
                fields[field_name] = handler(self, tok.text)
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        return ast.ObjectFrameClassStmt(
            name.text,
            sealed=self.boolean(flags.get("SealedClass")),
            probability_in_parent=(flags["ProbabilityInStructuralParent"].get("expr")
                                   if "ProbabilityInStructuralParent" in flags else None),
            structure_trait=flags["StructureTrait"].get("val") if "StructureTrait" in flags else None,
            multiple=self.boolean(flags.get("Multiple")),
            structural_parent=self.boolean(flags.get("StructuralParentClass")),
            mass_substance=self.boolean(flags.get("MassSubstance")),
            cardinality=flags["Cardinality"].get("val") if "Cardinality" in flags else None,
            dictionaries=tuple(dictionaries),
            pos=name.pos,
            **fields,
        )

    # templates and populated object classes

    def template_class_stmt(self) -> ast.TemplateClassStmt:
        self.expect_word("TemplateObjectClass", "")
        name = self.expect_kind(TokenKind.STRING, "as template class name")
        construct = f'template class "{name.text}"'
        self.open("(", construct)
        els = []
        attrs = []
        extents = None
        while not self.at_close(")"):
            if self.at_word("OuterDimensionSystemExtentSet") and extents is None:
                extents = self.dimension_set("OuterDimensionSystemExtentSet")
                continue
            el = self.xml_element(_TEMPLATE_FLAGS, construct)
            if el.tag == "Attribute":
                attrs.append(self.fold_attribute_base(el))
            else:
                els.append(el)
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        return ast.TemplateClassStmt(
            name.text,
            sp_ref=_ref(flags, "StructuralParentClass"),
            ofc_ref=_ref(flags, "ObjectFrameClass"),
            shape_template=self.boolean(flags.get("ShapeTemplate")),
            dimension_system=_ref(flags, "DimensionSystem"),
            spec_system=_ref(flags, "SpecificationSystem"),
            attributes=tuple(attrs),
            extents=extents,
            pos=name.pos,
        )

    def populated_object_class_stmt(self) -> ast.PopulatedObjectClassStmt:
        self.expect_word("PopulatedObjectClass", "")
        name = self.expect_kind(TokenKind.STRING, "as populated object class name")
        construct = f'populated object class "{name.text}"'
        self.open("(", construct)
        els = []
        attrs = []
        while not self.at_close(")"):
            el = self.xml_element(_POC_FLAGS, construct)
            if el.tag == "Attribute":
                attrs.append(self.fold_attribute_base(el))
            else:
                els.append(el)
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, construct)
        return ast.PopulatedObjectClassStmt(
            name.text,
            ofc_ref=_ref(flags, "ObjectFrameClass"),
            sp_ref=_ref(flags, "StructuralParentClass"),
            binder_source=self.boolean(flags.get("BinderSourceFlag")),
            passive=self.boolean(flags.get("PassiveParticipant")),
            extra=self.boolean(flags.get("ExtraParticipant")),
            multiple=self.boolean(flags.get("Multiple")),
            probability=flags["Probability"].get("expr") if "Probability" in flags else None,
            dimension_system=_ref(flags, "DimensionSystem"),
            spec_system=_ref(flags, "SpecificationSystem"),
            attributes=tuple(attrs),
            pos=name.pos,
        )

    # behavior classes

    def behavior_reference(self) -> ast.BehaviorReference:
        kw = self.advance()
        self.open("(", "BehaviorClassReference")
        els = []
        while not self.at_close(")"):
            els.append(self.xml_element(_REFERENCE_FLAGS, "BehaviorClassReference"))
        self.close(")")
        self.skip_semi()
        flags = self.collect_flags(els, "BehaviorClassReference")
        if "BehaviorClass" not in flags:
            raise ParseError("BehaviorClassReference needs <BehaviorClass ref = .../>", kw.pos)

        def param(tag):
            el = flags.get(tag)
            if el is None:
                return None
            if el.get("ref") is None:
                raise ParseError(f"<{tag}> needs a ref", el.pos)
            return ast.ParameterRef(el.get("ref"), el.get("expr"), pos=el.pos)

        return ast.BehaviorReference(
            flags["BehaviorClass"].get("ref"),
            probability=flags["Probability"].get("expr") if "Probability" in flags else None,
            actor=param("ParameterActor"),
            actee=param("ParameterActee"),
            extra=param("ParameterExtra"),
            pos=kw.pos,
        )

    def rule_part(self, construct: str) -> tuple:
        self.open("(", construct)
        items = []
        while not self.at_close(")"):
            if self.at_word("PopulatedObjectClass"):
                items.append(self.populated_object_class_stmt())
            elif self.at_word("BehaviorClassReference"):
                items.append(self.behavior_reference())
            else:
                raise self.error(f"expected a populated object class or behavior class reference "
                                 f"in {construct}, found {self.describe(self.peek())}")
        self.close(")")
        self.skip_semi()
        return tuple(items)

    def behavior_class_stmt(self) -> ast.BehaviorClassStmt:
        self.expect_word("BehaviorClass", "")
        name = self.expect_kind(TokenKind.STRING, "as behavior class name")
        construct = f'behavior class "{name.text}"'
        self.open("(", construct)
        els = []
        dictionaries: list[ast.DictionarySection] = []
        fields: dict = {}
        last = -1
        while not self.at_close(")"):
            tok = self.peek()
            if tok.is_punct("<"):
                els.append(self.xml_element(_BEHAVIOR_FLAGS, construct))
                continue
            if tok.kind not in (TokenKind.IDENT, TokenKind.KEYWORD) or tok.text not in _BEHAVIOR_SECTIONS:
                raise self.error(f"unexpected {self.describe(tok)} in {construct}")
            rank = _BEHAVIOR_SECTIONS[tok.text]
            if rank <= last:
                raise self.error(f"section {tok.text} is duplicated or out of order in {construct}")
            last = rank
            if tok.text in ast.DICTIONARY_KINDS:
                dictionaries.extend(self.dictionary_clause())
            elif tok.text == "Modification":
                self.advance()
                fields["modification"] = self.modification()
            elif tok.text == "HigherClasses":
                self.advance()
                fields["higher_classes"] = self.name_list("HigherClasses")
            elif tok.text == "PriorStates":
                self.advance()
                fields["prior"] = self.rule_part("PriorStates")
            else:
                self.advance()
                fields["post"] = self.rule_part("PostStates")
        self.close(")")
        self.skip_semi()
        for section in ("prior", "post"):
            if section not in fields:
                label = "PriorStates" if section == "prior" else "PostStates"
                raise ParseError(f"{construct} is missing its {label} section", name.pos)
        flags = self.collect_flags(els, construct)
        direction = None
        if "RuleDirection" in flags:
            el = flags["RuleDirection"]
            direction = el.get("type") if el.get("type") is not None else el.get("val")
            if direction not in ("Unspecified", "Forward", "Backward"):
                raise ParseError(f"unknown rule direction {direction!r}", el.pos)
        return ast.BehaviorClassStmt(
            name.text,
            bridge=_ref(flags, "BridgeObjectFrameClass"),
            sealed=self.boolean(flags.get("SealedClass")),
            causal_rule=self.boolean(flags.get("CausalRule")),
            direction=direction,
            negation=self.boolean(flags.get("Negation")),
            dictionaries=tuple(dictionaries),
            pos=name.pos,
            **fields,
        )

    def modification(self) -> tuple[ast.DictionarySection, ...]:
        self.open("(", "Modification")
        out: list[ast.DictionarySection] = []
        seen = set()
        while not self.at_close(")"):
            if not self.at_word("DictionaryModifyingVerbs", "DictionaryAdverbs") or self.peek().text in seen:
                raise self.error(f"unexpected {self.describe(self.peek())} in Modification")
            seen.add(self.peek().text)
            out.extend(self.dictionary_clause())
        self.close(")")
        self.skip_semi()
        return tuple(out)


def _ref(flags: dict[str, XmlEl], tag: str) -> str | None:
    el = flags.get(tag)
    return el.get("ref") if el is not None else None


def _keys(*keys: str) -> frozenset[str]:
    return frozenset(keys)


_DICT_FLAGS = {"DictionaryWordsIsNoun": _keys("val")}
_VALUE_SET_FLAGS = {"BaseValueSet": _keys("ref"), "SuperTypeUsage": _keys("val"),
                    "OrderedCollection": _keys("val")}
_MAPPING_FLAGS = {"Source": _keys("ref"), "Dest": _keys("ref"), "Function": _keys("expr")}
_TRANSFORM_FLAGS = {"Source": _keys("ref"), "Dest": _keys("ref")}
_ATTRIBUTE_TYPE_FLAGS = {"Probability": _keys("expr"), "SuperType": _keys("val"),
                         "StateAttributeType": _keys("val"), "OptionalCausalFeature": _keys("val"),
                         "ValueSetName": _keys("ref")}
_ATTRIBUTE_BASE = {"Attribute": _keys("ref", *ast.ATTRIBUTE_VALUE_KINDS)}
_ATTRIBUTE_FLAGS = {"Probability": _keys("expr"), **_ATTRIBUTE_BASE}
_DIMENSION_SYSTEM_FLAGS = {"RoleTrait": _keys("val")}
_DIMENSION_SET_FLAGS = {"DimensionSystem": _keys("ref"), "DimensionSystemType": _keys("val"),
                        "AnchorPoint": _keys("type", "val"), **_ATTRIBUTE_BASE}
_DESIGNATOR_FLAGS = {"BehaviorClassName": _keys("val"), "Probability": _keys("expr")}
_OFC_FLAGS = {"SealedClass": _keys("val"), "ProbabilityInStructuralParent": _keys("expr"),
              "StructureTrait": _keys("val"), "Multiple": _keys("val"),
              "StructuralParentClass": _keys("val"), "MassSubstance": _keys("val"),
              "Cardinality": _keys("val")}
_TEMPLATE_FLAGS = {"StructuralParentClass": _keys("ref"), "ObjectFrameClass": _keys("ref"),
                   "ShapeTemplate": _keys("val"), "DimensionSystem": _keys("ref"),
                   "SpecificationSystem": _keys("ref"), **_ATTRIBUTE_BASE}
_POC_FLAGS = {"ObjectFrameClass": _keys("ref"), "StructuralParentClass": _keys("ref"),
              "BinderSourceFlag": _keys("val"), "PassiveParticipant": _keys("val"),
              "ExtraParticipant": _keys("val"), "Multiple": _keys("val"),
              "Probability": _keys("expr"), "DimensionSystem": _keys("ref"),
              "SpecificationSystem": _keys("ref"), **_ATTRIBUTE_BASE}
_REFERENCE_FLAGS = {"BehaviorClass": _keys("ref"), "Probability": _keys("expr"),
                    "ParameterActor": _keys("ref", "expr"), "ParameterActee": _keys("ref", "expr"),
                    "ParameterExtra": _keys("ref", "expr")}
_BEHAVIOR_FLAGS = {"SealedClass": _keys("val"), "CausalRule": _keys("val"),
                   "RuleDirection": _keys("type", "val"), "BridgeObjectFrameClass": _keys("ref"),
                   "Negation": _keys("val")}

_BEHAVIOR_SECTIONS = {"DictionaryAntePriorWord": 0, "DictionaryPriorWord": 1, "Dictionary": 2,
                      "Modification": 3, "HigherClasses": 4, "PriorStates": 5, "PostStates": 6}


def _sec(rank, field_name, handler):
    return (rank, field_name, handler)


_OFC_SECTIONS = {
    "DictionaryAntePriorWord": _sec(0, "dictionaries", None),
    "DictionaryPriorWord": _sec(1, "dictionaries", None),
    "Dictionary": _sec(2, "dictionaries", None),
    "HigherClasses": _sec(3, "higher_classes", lambda p, w: p.name_list(w)),
    "StructuralParentClassesBase": _sec(4, "sp_bases", lambda p, w: p.name_list(w)),
    "RelationshipToParent": _sec(5, "relationship", lambda p, w: p.relationship_to_parent(w)),
    "AttributeTypes": _sec(6, "attribute_types",
                           lambda p, w: p.statement_list(w, "AttributeType", Parser.attribute_type_stmt)),
    "DimensionSystems": _sec(7, "dimension_systems",
                             lambda p, w: p.statement_list(w, "DimensionSystem", Parser.dimension_system_stmt)),
    "SpecificationSystems": _sec(8, "spec_systems",
                                 lambda p, w: p.statement_list(w, "SpecificationSystem", Parser.spec_system_stmt)),
    "RelationshipTypes": _sec(9, "relationship_types", lambda p, w: p.empty_section(w)),
    "Attributes": _sec(10, "attributes",
                       lambda p, w: p.statement_list(w, "Attribute", Parser.attribute_stmt)),
    "AttributesSection": _sec(10, "attributes",
                              lambda p, w: p.statement_list(w, "Attribute", Parser.attribute_stmt)),
    "Composition": _sec(11, "composition", lambda p, w: p.empty_section(w)),
    "Relationships": _sec(12, "relationships", lambda p, w: p.empty_section(w)),
    "Structure": _sec(13, "structure",
                      lambda p, w: p.statement_list(w, "ObjectFrameClass", Parser.object_frame_class_stmt)),
    "BehaviorsPotential": _sec(14, "behaviors_potential", lambda p, w: p.designators(w)),
    "BehaviorsPotentialSection": _sec(14, "behaviors_potential", lambda p, w: p.designators(w)),
    "BehaviorsActual": _sec(15, "behaviors_actual", lambda p, w: p.designators(w)),
    "BehaviorsActualSection": _sec(15, "behaviors_actual", lambda p, w: p.designators(w)),
}

_STATEMENTS = {
    "Integer": Parser.integer_decl,
    "FloatingPoint": Parser.float_decl,
    "String": Parser.string_decl,
    "ValueSet": Parser.value_set_stmt,
    "Mapping": Parser.mapping_stmt,
    "Transform": Parser.transform_stmt,
    "AttributeType": Parser.attribute_type_stmt,
    "Attribute": Parser.attribute_stmt,
    "DimensionSystem": Parser.dimension_system_stmt,
    "SpecificationSystem": Parser.spec_system_stmt,
    "ObjectFrameClass": Parser.object_frame_class_stmt,
    "TemplateObjectClass": Parser.template_class_stmt,
    "PopulatedObjectClass": Parser.populated_object_class_stmt,
    "BehaviorClass": Parser.behavior_class_stmt,
}


def parse_compilation_unit(tokens: list[Token], include_resolver: IncludeResolver | None = None
                           ) -> list[ast.Statement]:
    """Parse a token stream into statements, splicing ``#include`` files in order.

    ``include_resolver(name)`` returns ``(file_label, text)``; each name is
    included at most once per unit.
    """
    return Parser(tokens, include_resolver).compilation_unit()


def parse_text(text: str, file: str = "<input>", include_resolver: IncludeResolver | None = None
               ) -> list[ast.Statement]:
    return parse_compilation_unit(tokenize(text, file), include_resolver)


def parse_attribute_base_expression(tokens: list[Token]) -> ast.AttributeBase:
    """Parse a lone ``<Attribute ... />`` element."""
    p = Parser(tokens)
    base = p.attribute_base("attribute base expression")
    if p.peek().kind is not TokenKind.EOF:
        raise p.error(f"unexpected {p.describe(p.peek())} after attribute base expression")
    return base
