"""Exception hierarchy and source positions shared by every layer."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Position:
    file: str
    line: int
    col: int

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.col}"


class RossError(Exception):
    """Base class for every domain error raised by the package."""


class SyntaxProblem(RossError):
    def __init__(self, message: str, pos: Position | None = None):
        self.message = message
        self.pos = pos
        super().__init__(f"{pos}: {message}" if pos else message)


class LexError(SyntaxProblem):
    pass


class ParseError(SyntaxProblem):
    pass


class IncludeError(SyntaxProblem):
    pass


class ExprError(RossError):
    pass


class UnboundVariable(ExprError):
    pass


class RebindError(ExprError):
    pass


class OutOfRange(ExprError):
    pass


class OrderingError(ExprError):
    """Ordinal arithmetic or comparison on a set that cannot support it."""


class EvalTypeError(ExprError):
    pass


class DivisionByZero(ExprError):
    pass


class MembershipError(ExprError):
    pass


class RoutineError(ExprError):
    pass


class TransformFailed(ExprError):
    pass


class CompileError(RossError):
    """Raised by the compiler; carries every error diagnostic found."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        lines = "\n".join(str(d) for d in self.diagnostics)
        super().__init__(f"{len(self.diagnostics)} error(s)\n{lines}")


class LookupFailure(RossError):
    pass


class FactError(RossError):
    pass


class NoTemporalDimension(FactError):
    pass


class DuplicateIdentifier(FactError):
    pass


class AttributeConflict(FactError):
    pass


class UnknownInstance(FactError):
    pass


class TimelineError(FactError):
    pass


class MatchFailure(FactError):
    """An antecedent populated object contradicts the facts it was matched against."""


class XmlFormatError(RossError):
    pass


class InferenceError(RossError):
    pass


class EndOfTimeline(InferenceError):
    pass


class IncompatibleSeed(InferenceError):
    pass


class DepthLimitExceeded(InferenceError):
    pass


class ScenarioError(RossError):
    pass
