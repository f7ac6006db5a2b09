"""Interpreter for the routine language embedded in Transform statements."""

from __future__ import annotations

import logging

from ross.errors import RoutineError
from ross.syntax import ast

log = logging.getLogger(__name__)


class _Return(Exception):
    def __init__(self, value: bool):
        self.value = value


def run_routine(r: ast.RoutineBody, args: dict) -> tuple[dict, bool]:
    """Execute ``r`` with ``args`` bound to its parameters.

    Array parameters start zeroed when not supplied. Returns the final
    parameter values and the routine's boolean result (false when no
    ``Return`` is reached).
    """
    scalars: dict[str, str] = {}
    arrays: dict[str, list[int]] = {}
    for p in r.params:
        if p.length is not None:
            given = args.get(p.name)
            arr = [0] * p.length if given is None else list(given)
            if len(arr) != p.length:
                raise RoutineError(f"array {p.name} needs {p.length} elements, got {len(arr)}")
            arrays[p.name] = arr
        else:
            if p.name not in args:
                raise RoutineError(f"no argument for parameter {p.name}")
            scalars[p.name] = args[p.name]
    extra = set(args) - set(scalars) - set(arrays)
    if extra:
        raise RoutineError(f"unknown routine argument(s): {', '.join(sorted(extra))}")
    local_vars = {}
    for loc in r.locals:
        if loc.name in scalars or loc.name in arrays or loc.name in local_vars:
            raise RoutineError(f"name {loc.name} declared twice")
        local_vars[loc.name] = loc.initial

    def index_of(ix) -> int:
        if isinstance(ix, int):
            return ix
        if ix in local_vars:
            return local_vars[ix]
        raise RoutineError(f"undeclared index name {ix}")

    def run(stmts) -> None:
        for st in stmts:
            if isinstance(st, ast.ReturnStmt):
                raise _Return(st.value)
            if isinstance(st, ast.ArrayAssign):
                if st.array not in arrays:
                    raise RoutineError(f"assignment to undeclared array {st.array}")
                arr = arrays[st.array]
                i = index_of(st.index)
                if not 0 <= i < len(arr):
                    raise RoutineError(f"index {i} out of bounds for {st.array}[{len(arr)}]")
                arr[i] = st.value
            elif isinstance(st, ast.IfChain):
                for cond, body in st.branches:
                    if cond.name not in scalars:
                        raise RoutineError(f"condition on undeclared name {cond.name}")
                    if scalars[cond.name] == cond.literal:
                        run(body)
                        break
                else:
                    if st.otherwise is not None:
                        run(st.otherwise)
                    else:
                        log.warning("routine: no branch matched %s", {k: scalars[k] for k in scalars})
            else:
                raise RoutineError(f"unsupported routine statement {st!r}")

    try:
        run(r.body)
        result = False
    except _Return as ret:
        result = ret.value
    outputs: dict = dict(scalars)
    outputs.update(arrays)
    return outputs, result
