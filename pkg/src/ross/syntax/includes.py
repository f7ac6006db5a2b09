"""Locating ``#include`` targets and reading Star source files."""

from __future__ import annotations

from pathlib import Path

from ross.syntax import ast
from ross.syntax.lexer import tokenize
from ross.syntax.parser import parse_compilation_unit


class SearchPathResolver:
    """Resolve include names against an ordered list of directories."""

    def __init__(self, paths=()):
        self.paths = [Path(p) for p in paths]

    def locate(self, name: str) -> Path:
        for d in self.paths:
            candidate = d / name
            if candidate.is_file():
                return candidate
        raise LookupError(f"{name} not found in include path")

    def __call__(self, name: str) -> tuple[str, str]:
        path = self.locate(name)
        return str(path), read_source(path)


def read_source(path) -> str:
    return Path(path).read_text(encoding="ascii", errors="surrogateescape")


def parse_files(paths, include_paths=()) -> list[ast.Statement]:
    """Parse several files as one compilation unit; includes resolve against
    each file's own directory first, then ``include_paths``."""
    statements: list[ast.Statement] = []
    included: set[str] = set()
    from ross.syntax.parser import Parser

    for path in paths:
        path = Path(path)
        resolver = SearchPathResolver([path.parent, *include_paths])
        included.add(path.name)
        parser = Parser(tokenize(read_source(path), str(path)), resolver, included)
        statements.extend(parser.compilation_unit())
    return statements


def parse_file(path, include_paths=()) -> list[ast.Statement]:
    return parse_files([path], include_paths)
