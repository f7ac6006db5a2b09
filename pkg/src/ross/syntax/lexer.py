"""Tokenizer for Star source text."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ross.errors import LexError, Position

KEYWORDS = frozenset(
    {
        "Integer",
        "FloatingPoint",
        "String",
        "ValueSet",
        "Mapping",
        "Transform",
        "AttributeType",
        "Attribute",
        "DimensionSystem",
        "SpecificationSystem",
        "ObjectFrameClass",
        "TemplateObjectClass",
        "PopulatedObjectClass",
        "BehaviorClass",
        "BehaviorClassReference",
    }
)

NIL_WORDS = frozenset({"nil", "Nil", "NIL"})


class TokenKind(Enum):
    IDENT = "identifier"
    VAR = "variable"
    INT = "integer"
    FLOAT = "float"
    STRING = "string"
    PUNCT = "punctuation"
    KEYWORD = "keyword"
    NIL = "nil"
    INCLUDE = "include"
    EOF = "eof"


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    pos: Position

    def __repr__(self) -> str:
        return f"Token({self.kind.name}, {self.text!r}, {self.pos})"

    def is_punct(self, text: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.text == text

    def is_word(self, text: str) -> bool:
        return self.kind in (TokenKind.IDENT, TokenKind.KEYWORD) and self.text == text


# longest first
_PUNCT = ("/>", "..", "==", "!=", "<=", ">=", "(", ")", "{", "}", "[", "]",
          "<", ">", "=", ";", ",", ":", "+", "-", "*", "/", ".")


def _ident_char(c: str) -> bool:
    return c.isascii() and (c.isalnum() or c == "_")


def tokenize(text: str, file: str = "<input>") -> list[Token]:
    """Split ``text`` into tokens, ending with an EOF token."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(k: int) -> None:
        nonlocal i, line, col
        for _ in range(k):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        pos = Position(file, line, col)
        if c in " \t\r\n\f":
            advance(1)
            continue
        if not c.isascii():
            raise LexError(f"non-ASCII character {c!r}", pos)
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end < 0:
                raise LexError("unterminated block comment", pos)
            advance(end + 2 - i)
            continue
        if c == "#":
            j = i + 1
            while j < n and text[j].isalpha():
                j += 1
            if text[i + 1:j] != "include":
                raise LexError(f"unknown directive {text[i:j]!r}", pos)
            k = j
            while k < n and text[k] in " \t":
                k += 1
            close = {"<": ">", '"': '"'}.get(text[k] if k < n else "")
            end = text.find(close, k + 1) if close else -1
            if end < 0 or "\n" in text[k:end]:
                raise LexError("malformed #include directive", pos)
            tokens.append(Token(TokenKind.INCLUDE, text[k + 1:end].strip(), pos))
            advance(end + 1 - i)
            continue
        if c == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    break
                j += 1
            if j >= n or text[j] != '"':
                raise LexError("unterminated string literal", pos)
            body = text[i + 1:j]
            bad = next((ch for ch in body if not ch.isascii()), None)
            if bad is not None:
                raise LexError(f"non-ASCII character {bad!r}", pos)
            tokens.append(Token(TokenKind.STRING, body, pos))
            advance(j + 1 - i)
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            kind = TokenKind.INT
            # a single dot followed by a digit makes a float; ".." is a range
            if j + 1 < n and text[j] == "." and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
                kind = TokenKind.FLOAT
            tokens.append(Token(kind, text[i:j], pos))
            advance(j - i)
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n:
                ch = text[j]
                if _ident_char(ch):
                    j += 1
                elif ch in "-." and j + 1 < n and text[j + 1].isascii() and (
                    text[j + 1].isalpha() if ch == "." else text[j + 1].isalnum()
                ):
                    j += 1
                else:
                    break
            word = text[i:j]
            if j < n and text[j] == "$":
                tokens.append(Token(TokenKind.VAR, word + "$", pos))
                advance(j + 1 - i)
                continue
            if word in KEYWORDS:
                kind = TokenKind.KEYWORD
            elif word in NIL_WORDS:
                kind = TokenKind.NIL
            else:
                kind = TokenKind.IDENT
            tokens.append(Token(kind, word, pos))
            advance(j - i)
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token(TokenKind.PUNCT, p, pos))
                advance(len(p))
                break
        else:
            raise LexError(f"unexpected character {c!r}", pos)
    tokens.append(Token(TokenKind.EOF, "", Position(file, line, col)))
    return tokens
