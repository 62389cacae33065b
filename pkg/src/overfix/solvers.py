"""Solver back ends: an external SMT process and an exact internal evaluator.

The external backend pipes canonical SMT-LIB text to a solver binary
(``OVERFIX_SOLVER`` or an explicit path) and reads ``sat``/``unsat``/``unknown``
from the first non-blank output line.

The internal backend decides scripts exhaustively over a scaled domain: every
defining equality ``(= v expr)`` is eliminated by substitution, and the
remaining free (input) variables are enumerated over their type's analog
range.  It is exact on that domain and needs no external process, which keeps
the default pipeline and the brute-force oracles hermetic.
"""

from __future__ import annotations

import os
import re
import shlex
import subprocess
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .bounds import ANALOG_8BIT, BoundsProfile, enumeration_domain
from .constraints import (
    EvalError,
    Formula,
    SmtScript,
    UndeclaredVariable,
    emit,
    evaluate,
    normalize,
    vars_of,
)


class Verdict(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    UNKNOWN = "unknown"


@dataclass
class SolverResult:
    verdict: Verdict
    model: dict[str, int] | None = None
    reason: str | None = None

    @property
    def is_sat(self) -> bool:
        return self.verdict is Verdict.SAT

    @property
    def is_unsat(self) -> bool:
        return self.verdict is Verdict.UNSAT


class SolverTimeout(Exception):
    def __init__(self, seconds: float):
        super().__init__(f"solver timed out after {seconds} s")
        self.seconds = seconds


class SolverProtocolError(Exception):
    def __init__(self, raw_output: str):
        super().__init__(f"unrecognized solver reply: {raw_output[:200]!r}")
        self.raw_output = raw_output


# ---------------------------------------------------------------------------
# External process backend

_DEFINE_FUN = re.compile(
    r"\(define-fun\s+(\S+)\s+\(\)\s+Int\s+(\(-\s*\d+\)|-?\d+)\s*\)"
)


def _parse_model(text: str) -> dict[str, int]:
    model: dict[str, int] = {}
    for name, val in _DEFINE_FUN.findall(text):
        val = val.strip()
        if val.startswith("("):
            model[name] = -int(val.strip("()- \t"))
        else:
            model[name] = int(val)
    return model


class ExternalSolver:
    """Runs a solver binary on the emitted script text."""

    def __init__(self, command: str | None = None, timeout: float = 10.0,
                 use_stdin: bool = True, request_model: bool = True):
        command = command or os.environ.get("OVERFIX_SOLVER")
        if not command:
            raise ValueError("no solver binary: set OVERFIX_SOLVER or pass --solver")
        # The command may carry flags, e.g. "z3 -in" or "cvc5 --lang smt2".
        self.command = shlex.split(command)
        self.timeout = timeout
        self.use_stdin = use_stdin
        self.request_model = request_model

    def solve(self, script: SmtScript) -> SolverResult:
        text = emit(script)
        if self.request_model:
            text += "(get-model)\n"
        try:
            if self.use_stdin:
                proc = subprocess.run(
                    self.command, input=text, capture_output=True, text=True,
                    timeout=self.timeout,
                )
            else:
                with tempfile.NamedTemporaryFile(
                    "w", suffix=".smt2", delete=False
                ) as tf:
                    tf.write(text)
                    path = tf.name
                try:
                    proc = subprocess.run(
                        self.command + [path], capture_output=True, text=True,
                        timeout=self.timeout,
                    )
                finally:
                    os.unlink(path)
        except subprocess.TimeoutExpired as exc:
            raise SolverTimeout(self.timeout) from exc
        out = proc.stdout
        first = next((ln.strip() for ln in out.splitlines() if ln.strip()), "")
        if first == "sat":
            model = _parse_model(out) if self.request_model else None
            return SolverResult(Verdict.SAT, model=model or None)
        if first == "unsat":
            return SolverResult(Verdict.UNSAT)
        if first == "unknown":
            return SolverResult(Verdict.UNKNOWN, reason="solver replied unknown")
        raise SolverProtocolError(out or proc.stderr)


# ---------------------------------------------------------------------------
# Internal exhaustive backend

_PYOP = {
    "add": "+", "sub": "-", "mul": "*",
    "lt": "<", "le": "<=", "gt": ">", "ge": ">=", "eq": "==", "ne": "!=",
}


def _pyexpr(f: Formula) -> str:
    """Translate a formula into a Python expression over mangled variables."""
    op = f.op
    if op == "const":
        return repr(f.args[0])
    if op == "var":
        return f"_v_{f.args[0]}"
    if op == "neg":
        return f"(-{_pyexpr(f.args[0])})"
    if op == "not":
        return f"(not {_pyexpr(f.args[0])})"
    if op == "sqrt":
        return f"_isqrt({_pyexpr(f.args[0])})"
    if op == "and":
        if not f.args:
            return "True"
        return "(" + " and ".join(_pyexpr(a) for a in f.args) + ")"
    if op == "or":
        if not f.args:
            return "False"
        return "(" + " or ".join(_pyexpr(a) for a in f.args) + ")"
    if op == "ite":
        c, t, e = (_pyexpr(a) for a in f.args)
        return f"({t} if {c} else {e})"
    if op == "div":
        return f"_cdiv({_pyexpr(f.args[0])}, {_pyexpr(f.args[1])})"
    if op == "mod":
        return f"_cmod({_pyexpr(f.args[0])}, {_pyexpr(f.args[1])})"
    if op in _PYOP:
        return f"({_pyexpr(f.args[0])} {_PYOP[op]} {_pyexpr(f.args[1])})"
    raise ValueError(f"unknown formula op {op!r}")


def _isqrt_nonneg(n: int) -> int:
    if n < 0:
        raise EvalError(f"sqrt of negative value {n}")
    import math
    return math.isqrt(n)


def _compile_query(defs: dict[str, Formula], residual: list[Formula],
                   free: list[str]):
    """One function (free values) -> bool deciding all residual constraints."""
    from .constraints import c_div, c_mod

    lines = ["def _q(" + ", ".join(f"_v_{n}" for n in free) + "):"]
    for name, rhs in defs.items():
        lines.append(f"    _v_{name} = {_pyexpr(rhs)}")
    if residual:
        conds = " and ".join(f"({_pyexpr(r)})" for r in residual)
        lines.append(f"    return {conds}")
    else:
        lines.append("    return True")
    namespace = {"_cdiv": c_div, "_cmod": c_mod, "_isqrt": _isqrt_nonneg,
                 "EvalError": EvalError}
    exec("\n".join(lines), namespace)
    return namespace["_q"]


def _definition_order(script: SmtScript) -> tuple[dict[str, Formula], list[Formula]]:
    """Split asserts into defining equalities and residual constraints."""
    defs: dict[str, Formula] = {}
    residual: list[Formula] = []
    for ta in script.asserts:
        f = normalize(ta.formula)
        if f.op == "eq":
            left, right = f.args
            if left.op == "var" and left.var_name not in defs \
                    and left.var_name not in vars_of(right):
                defs[left.var_name] = right
                continue
            if right.op == "var" and right.var_name not in defs \
                    and right.var_name not in vars_of(left):
                defs[right.var_name] = left
                continue
        residual.append(f)
    return defs, residual


class _Resolver(dict):
    """Env that lazily computes substitution-defined variables."""

    def __init__(self, base: dict[str, int], defs: dict[str, Formula]):
        super().__init__(base)
        self._defs = defs
        self._visiting: set[str] = set()

    def __missing__(self, name: str) -> int:
        if name not in self._defs or name in self._visiting:
            raise UndeclaredVariable(name)
        self._visiting.add(name)
        try:
            value = evaluate(self._defs[name], self)
        finally:
            self._visiting.discard(name)
        self[name] = int(value)
        return self[name]

    def __contains__(self, name: str) -> bool:  # evaluate() probes membership
        return dict.__contains__(self, name) or name in self._defs


@dataclass
class InternalSolver:
    """Exhaustive evaluation over the scaled (analog) variable domains.

    Defining equalities are eliminated by substitution; the remaining
    constraints split into connected components over the surviving free
    (input) variables, and each component is enumerated independently.  This
    keeps whole-path scripts tractable: unrelated inputs multiply the search
    space only until they are separated.
    """

    profile: BoundsProfile = field(default_factory=lambda: ANALOG_8BIT)
    max_combinations: int = 2_000_000

    def solve(self, script: SmtScript) -> SolverResult:
        defs, residual = _definition_order(script)

        for f in residual:
            if f.op == "or" and not f.args:   # folded FALSE
                return SolverResult(Verdict.UNSAT)
        residual = [f for f in residual if not (f.op == "and" and not f.args)]

        free_set: set[str] = set()
        for f in residual:
            free_set |= vars_of(f)
        for rhs in defs.values():
            free_set |= vars_of(rhs)
        free_set -= set(defs)

        # free-variable dependencies of each residual, through the definitions
        dep_cache: dict[str, frozenset[str]] = {}

        def var_deps(name: str) -> frozenset[str]:
            if name in dep_cache:
                return dep_cache[name]
            if name in defs:
                dep_cache[name] = frozenset()  # cycle guard
                dep_cache[name] = formula_deps(defs[name])
            else:
                dep_cache[name] = frozenset((name,))
            return dep_cache[name]

        def formula_deps(f: Formula) -> frozenset[str]:
            out: set[str] = set()
            for v in vars_of(f):
                out |= var_deps(v)
            return frozenset(out)

        residual_deps = [formula_deps(f) for f in residual]

        # union-find over free variables that co-occur in a constraint
        parent: dict[str, str] = {name: name for name in free_set}

        def find(x: str) -> str:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: str, b: str) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for deps in residual_deps:
            deps = sorted(deps)
            for other in deps[1:]:
                union(deps[0], other)

        components: dict[str, list[int]] = {}
        constant_checks: list[int] = []
        for idx, deps in enumerate(residual_deps):
            if not deps:
                constant_checks.append(idx)
            else:
                components.setdefault(find(next(iter(deps))), []).append(idx)

        def needed_defs(formulas: list[Formula]) -> dict[str, Formula]:
            needed: set[str] = set()

            def visit(f: Formula) -> None:
                for v in vars_of(f):
                    if v in defs and v not in needed:
                        needed.add(v)
                        visit(defs[v])

            for f in formulas:
                visit(f)
            return {k: v for k, v in defs.items() if k in needed}

        # constraints with no free inputs fold to a single evaluation
        if constant_checks:
            checks = [residual[i] for i in constant_checks]
            query = _compile_query(needed_defs(checks), checks, [])
            try:
                if not query():
                    return SolverResult(Verdict.UNSAT)
            except (EvalError, ZeroDivisionError):
                return SolverResult(Verdict.UNSAT)

        def domain_for(name: str):
            decl = script.declared(name)
            if decl is None:
                raise UndeclaredVariable(name)
            return enumeration_domain(decl.declared_ctype, self.profile)

        witness_values: dict[str, int] = {}
        for root in sorted(components):
            idxs = components[root]
            comp_vars = sorted(set().union(*(residual_deps[i] for i in idxs)))
            domains = [domain_for(name) for name in comp_vars]
            total = 1
            for d in domains:
                total *= len(d)
                if total > self.max_combinations:
                    return SolverResult(
                        Verdict.UNKNOWN,
                        reason=("domain too large for exhaustive search "
                                f"({len(comp_vars)} coupled free variables)"))
            comp_residual = [residual[i] for i in idxs]
            query = _compile_query(needed_defs(comp_residual), comp_residual, comp_vars)
            hit = None
            for values in product(*domains):
                try:
                    if query(*values):
                        hit = values
                        break
                except (EvalError, ZeroDivisionError):
                    continue  # undefined behavior on this input; not a witness
            if hit is None:
                return SolverResult(Verdict.UNSAT)
            witness_values.update(zip(comp_vars, hit))

        for name in free_set - set(witness_values):
            witness_values[name] = domain_for(name)[0]
        return SolverResult(Verdict.SAT,
                            model=self._witness(witness_values, defs))

    @staticmethod
    def _witness(values: dict[str, int], defs: dict[str, Formula]) -> dict[str, int]:
        env = _Resolver(dict(values), defs)
        for name in defs:
            try:
                env[name]
            except (UndeclaredVariable, EvalError, ZeroDivisionError):
                pass
        return {k: int(v) for k, v in env.items()}
