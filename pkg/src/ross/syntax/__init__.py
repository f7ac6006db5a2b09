"""Star language front end: tokens, syntax tree, parser and pretty-printer."""

from ross.syntax.includes import SearchPathResolver, parse_file, parse_files
from ross.syntax.lexer import Token, TokenKind, tokenize
from ross.syntax.parser import parse_attribute_base_expression, parse_compilation_unit, parse_text
from ross.syntax.printer import pretty_print

__all__ = [
    "SearchPathResolver",
    "Token",
    "TokenKind",
    "parse_attribute_base_expression",
    "parse_compilation_unit",
    "parse_file",
    "parse_files",
    "parse_text",
    "pretty_print",
    "tokenize",
]
