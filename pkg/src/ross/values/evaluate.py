"""Evaluation of attribute expressions under variable environments."""

from __future__ import annotations

import operator
from typing import Iterator, Mapping

from ross.errors import (
    DivisionByZero,
    EvalTypeError,
    OrderingError,
    OutOfRange,
    RebindError,
    UnboundVariable,
)
from ross.syntax import ast
from ross.syntax.ast import NIL
from ross.values.valueset import Raw, ValueSet, _is_int


class Environment:
    """Variable bindings; a name may be bound only once."""

    def __init__(self, bindings: Mapping[str, Raw] | None = None):
        self._b: dict[str, Raw] = {}
        for k, v in (bindings or {}).items():
            self.bind(k, v)

    def bind(self, name: str, value: Raw) -> None:
        if not name.endswith("$") or len(name) < 2:
            raise EvalTypeError(f"invalid variable name {name!r}")
        if name in self._b:
            raise RebindError(f"variable {name} is already bound to {self._b[name]!r}")
        self._b[name] = value

    def get(self, name: str) -> Raw:
        try:
            return self._b[name]
        except KeyError:
            raise UnboundVariable(f"variable {name} is not bound") from None

    def __contains__(self, name: str) -> bool:
        return name in self._b

    def __iter__(self) -> Iterator[str]:
        return iter(self._b)

    @property
    def bindings(self) -> dict[str, Raw]:
        return dict(self._b)

    def copy(self) -> Environment:
        e = Environment()
        e._b = dict(self._b)
        return e

    def __repr__(self) -> str:
        return f"Environment({self._b!r})"


_CMP = {
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
}


def variables(expr: ast.Expr) -> set[str]:
    """Names of all variables referenced by ``expr``."""
    if isinstance(expr, ast.Var):
        return {expr.name}
    if isinstance(expr, ast.Paren):
        return variables(expr.inner)
    if isinstance(expr, (ast.BinOp, ast.Compare)):
        return variables(expr.left) | variables(expr.right)
    return set()


def _numeric(v) -> bool:
    return _is_int(v) or isinstance(v, float)


def _divide(a, b):
    if b == 0:
        raise DivisionByZero("division by zero")
    if _is_int(a) and _is_int(b) and a % b == 0:
        return a // b
    return a / b


def _arith(op: str, a, b, vs: ValueSet | None):
    if a is NIL or b is NIL:
        raise EvalTypeError("arithmetic on a nil value")
    if _numeric(a) and _numeric(b):
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        return _divide(a, b)
    # ordinal arithmetic: enumerated member plus or minus an integer offset
    if isinstance(a, str) and _is_int(b) and op in "+-":
        member, k = a, (b if op == "+" else -b)
    elif _is_int(a) and isinstance(b, str) and op == "+":
        member, k = b, a
    else:
        raise EvalTypeError(f"cannot apply {op!r} to {a!r} and {b!r}")
    if vs is None or vs.kind != "enum":
        raise OrderingError(f"ordinal arithmetic on {member!r} needs an enumerated value set")
    return vs.shift(member, k, implicit=True)


def _compare(op: str, a, b, vs: ValueSet | None) -> bool:
    if op == "==":
        return a == b
    if op == "!=":
        return a != b
    if _numeric(a) and _numeric(b):
        return _CMP[op](a, b)
    if isinstance(a, str) and isinstance(b, str):
        if vs is None:
            raise OrderingError(f"cannot order {a!r} and {b!r} without a value set")
        return _CMP[op](vs.compare_key(a), vs.compare_key(b))
    raise EvalTypeError(f"cannot compare {a!r} and {b!r}")


def _eval(expr: ast.Expr, env: Environment, vs: ValueSet | None):
    if isinstance(expr, ast.Const):
        return expr.value
    if isinstance(expr, ast.Var):
        return env.get(expr.name)
    if isinstance(expr, ast.Paren):
        return _eval(expr.inner, env, vs)
    if isinstance(expr, ast.BinOp):
        return _arith(expr.op, _eval(expr.left, env, vs), _eval(expr.right, env, vs), vs)
    if isinstance(expr, ast.Compare):
        return _compare(expr.op, _eval(expr.left, env, vs), _eval(expr.right, env, vs), vs)
    raise EvalTypeError(f"not an expression: {expr!r}")


def evaluate(expr: ast.Expr, env: Environment | None = None, target: ValueSet | None = None):
    """Evaluate ``expr``; a non-boolean result must be a member of ``target``.

    Ordinal steps on enumerated members and relational comparisons of
    enumerated members are carried out in ``target``.
    """
    result = _eval(expr, env or Environment(), target)
    if target is not None and not isinstance(result, bool) and not target.contains(result):
        raise OutOfRange(f"{result!r} is outside value set {target.name}")
    return result
