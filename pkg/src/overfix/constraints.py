"""Constraint formula IR, SSA variables, and canonical SMT-LIB v2 emission.

Formulas are immutable trees over mathematical integers.  Overflow is modeled
as a bound violation (``v > INT_MAX``), so scripts are emitted in QF_NIA over
``Int`` rather than bit-vectors, where wraparound would make such checks
unsatisfiable by construction.

``sqrt`` nodes denote the real square root of a (constant) argument and are
normalized away before emission: comparisons against ``sqrt(K)`` fold to exact
integer thresholds, and any residual occurrence is either replaced by its
integer floor or expanded into a floor-sqrt defining constraint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .bounds import CType


class UndeclaredVariable(Exception):
    """An assert references a symbol with no declaration."""

    def __init__(self, symbol: str):
        super().__init__(f"undeclared variable: {symbol}")
        self.symbol = symbol


class NegativeInput(Exception):
    """floor_sqrt of a negative number."""


def floor_sqrt(n: int) -> int:
    """Greatest k with k*k <= n, in pure integer arithmetic."""
    if n < 0:
        raise NegativeInput(f"floor_sqrt({n})")
    return math.isqrt(n)


# ---------------------------------------------------------------------------
# SSA variables


@dataclass(frozen=True)
class SsaVar:
    """One single-assignment version of a program variable, sorted as Int."""

    name: str
    base: str
    version: int
    declared_ctype: CType


class SsaFactory:
    """Mints SSA variables with per-base version counters."""

    def __init__(self) -> None:
        self._counters: dict[str, int] = {}

    def fresh(self, base: str, ctype: CType) -> SsaVar:
        version = self._counters.get(base, 0) + 1
        self._counters[base] = version
        return SsaVar(f"{base}_{version}", base, version, ctype)


# ---------------------------------------------------------------------------
# Formulas

BOOL_OPS = frozenset({"lt", "le", "gt", "ge", "eq", "ne", "and", "or", "not"})
CMP_OPS = frozenset({"lt", "le", "gt", "ge", "eq", "ne"})
ARITH_OPS = frozenset({"add", "sub", "mul", "div", "mod"})


@dataclass(frozen=True)
class Formula:
    """Immutable expression tree node."""

    op: str
    args: tuple = ()

    def is_bool(self) -> bool:
        return self.op in BOOL_OPS

    def is_const(self) -> bool:
        return self.op == "const"

    @property
    def value(self) -> int:
        assert self.op == "const"
        return self.args[0]

    @property
    def var_name(self) -> str:
        assert self.op == "var"
        return self.args[0]

    def __repr__(self) -> str:  # compact, for debugging and diffs
        return to_sexpr(self)


def const(n: int) -> Formula:
    return Formula("const", (n,))


def var(v: SsaVar | str) -> Formula:
    name = v.name if isinstance(v, SsaVar) else v
    return Formula("var", (name,))


def add(a: Formula, b: Formula) -> Formula:
    return Formula("add", (a, b))


def sub(a: Formula, b: Formula) -> Formula:
    return Formula("sub", (a, b))


def mul(a: Formula, b: Formula) -> Formula:
    return Formula("mul", (a, b))


def div(a: Formula, b: Formula) -> Formula:
    return Formula("div", (a, b))


def mod(a: Formula, b: Formula) -> Formula:
    return Formula("mod", (a, b))


def neg(a: Formula) -> Formula:
    return Formula("neg", (a,))


def lt(a: Formula, b: Formula) -> Formula:
    return Formula("lt", (a, b))


def le(a: Formula, b: Formula) -> Formula:
    return Formula("le", (a, b))


def gt(a: Formula, b: Formula) -> Formula:
    return Formula("gt", (a, b))


def ge(a: Formula, b: Formula) -> Formula:
    return Formula("ge", (a, b))


def eq(a: Formula, b: Formula) -> Formula:
    return Formula("eq", (a, b))


def ne(a: Formula, b: Formula) -> Formula:
    return Formula("ne", (a, b))


def and_(*xs: Formula) -> Formula:
    return Formula("and", tuple(xs))


def or_(*xs: Formula) -> Formula:
    return Formula("or", tuple(xs))


def not_(a: Formula) -> Formula:
    return Formula("not", (a,))


def ite(c: Formula, t: Formula, e: Formula) -> Formula:
    return Formula("ite", (c, t, e))


def sqrt(a: Formula) -> Formula:
    return Formula("sqrt", (a,))


def as_bool(f: Formula) -> Formula:
    """Coerce a C int-valued formula to a boolean (nonzero test)."""
    return f if f.is_bool() else ne(f, const(0))


def as_int(f: Formula) -> Formula:
    """Coerce a boolean formula to its C 0/1 integer value."""
    return ite(f, const(1), const(0)) if f.is_bool() else f


def vars_of(f: Formula) -> frozenset[str]:
    """All variable names referenced by ``f``."""
    if f.op == "var":
        return frozenset((f.args[0],))
    if f.op == "const":
        return frozenset()
    out: set[str] = set()
    for a in f.args:
        if isinstance(a, Formula):
            out |= vars_of(a)
    return frozenset(out)


def c_div(a: int, b: int) -> int:
    """C truncating division (rounds toward zero)."""
    q = abs(a) // abs(b)
    return -q if (a < 0) != (b < 0) else q


def c_mod(a: int, b: int) -> int:
    return a - b * c_div(a, b)


class EvalError(Exception):
    """Formula evaluation hit undefined behavior (e.g. division by zero)."""


def evaluate(f: Formula, env: Mapping[str, int]):
    """Evaluate over mathematical integers with C division semantics.

    Comparisons and connectives return bool; everything else returns int.
    ``sqrt`` evaluates to the integer floor of the square root.
    """
    op = f.op
    if op == "const":
        return f.args[0]
    if op == "var":
        name = f.args[0]
        if name not in env:
            raise UndeclaredVariable(name)
        return env[name]
    if op == "ite":
        c = evaluate(f.args[0], env)
        return evaluate(f.args[1], env) if c else evaluate(f.args[2], env)
    if op == "and":
        return all(evaluate(a, env) for a in f.args)
    if op == "or":
        return any(evaluate(a, env) for a in f.args)
    if op == "not":
        return not evaluate(f.args[0], env)
    a = evaluate(f.args[0], env)
    if op == "neg":
        return -a
    if op == "sqrt":
        if a < 0:
            raise EvalError(f"sqrt of negative value {a}")
        return math.isqrt(a)
    b = evaluate(f.args[1], env)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise EvalError("division by zero")
        return c_div(a, b)
    if op == "mod":
        if b == 0:
            raise EvalError("modulo by zero")
        return c_mod(a, b)
    if op == "lt":
        return a < b
    if op == "le":
        return a <= b
    if op == "gt":
        return a > b
    if op == "ge":
        return a >= b
    if op == "eq":
        return a == b
    if op == "ne":
        return a != b
    raise ValueError(f"unknown formula op {op!r}")


# ---------------------------------------------------------------------------
# Normalization: constant folding and exact integer rewriting of sqrt


def _sqrt_thresholds(k: int) -> tuple[int, int]:
    """(floor, ceil) of the real sqrt of a nonnegative constant k."""
    f = math.isqrt(k)
    return f, f if f * f == k else f + 1


_FLIP = {"lt": "gt", "le": "ge", "gt": "lt", "ge": "le", "eq": "eq", "ne": "ne"}


def _fold_sqrt_cmp(op: str, x: Formula, k: int, negated: bool) -> Formula:
    """Rewrite ``x op s`` where s is the real sqrt(k) (or -sqrt(k)) exactly."""
    floor_s, ceil_s = _sqrt_thresholds(k)
    perfect = floor_s == ceil_s
    if not negated:
        if op == "gt":
            return gt(x, const(floor_s))
        if op == "ge":
            return ge(x, const(ceil_s))
        if op == "lt":
            return lt(x, const(ceil_s))
        if op == "le":
            return le(x, const(floor_s))
        if op == "eq":
            return eq(x, const(floor_s)) if perfect else Formula("or", ())
        if op == "ne":
            return ne(x, const(floor_s)) if perfect else Formula("and", ())
    else:
        if op == "gt":
            return gt(x, const(-ceil_s))
        if op == "ge":
            return ge(x, const(-floor_s))
        if op == "lt":
            return lt(x, const(-floor_s))
        if op == "le":
            return le(x, const(-ceil_s))
        if op == "eq":
            return eq(x, const(-floor_s)) if perfect else Formula("or", ())
        if op == "ne":
            return ne(x, const(-floor_s)) if perfect else Formula("and", ())
    raise ValueError(op)


def _as_sqrt_const(f: Formula) -> tuple[int, bool] | None:
    """Match sqrt(const k) or neg(sqrt(const k)); return (k, negated)."""
    if f.op == "sqrt" and f.args[0].is_const():
        return f.args[0].value, False
    if f.op == "neg" and f.args[0].op == "sqrt" and f.args[0].args[0].is_const():
        return f.args[0].args[0].value, True
    return None


def normalize(f: Formula) -> Formula:
    """Fold constants and rewrite sqrt comparisons to exact integer form."""
    if f.op in ("const", "var"):
        return f
    args = tuple(normalize(a) if isinstance(a, Formula) else a for a in f.args)
    op = f.op

    if op in CMP_OPS:
        left, right = args
        m = _as_sqrt_const(right)
        if m is not None:
            return _fold_sqrt_cmp(op, left, m[0], m[1])
        m = _as_sqrt_const(left)
        if m is not None:
            return _fold_sqrt_cmp(_FLIP[op], right, m[0], m[1])

    # A sqrt node that survives here (outside a comparison) keeps its
    # floor-square-root meaning; evaluation and emission floor it.

    if all(isinstance(a, Formula) and a.is_const() for a in args) and op in (
        "add", "sub", "mul", "neg", "div", "mod", "lt", "le", "gt", "ge", "eq", "ne",
    ):
        vals = [a.value for a in args]
        try:
            if op == "neg":
                return const(-vals[0])
            if op == "add":
                return const(vals[0] + vals[1])
            if op == "sub":
                return const(vals[0] - vals[1])
            if op == "mul":
                return const(vals[0] * vals[1])
            if op == "div":
                return const(c_div(vals[0], vals[1]))
            if op == "mod":
                return const(c_mod(vals[0], vals[1]))
        except ZeroDivisionError:
            return Formula(op, args)
        result = evaluate(Formula(op, tuple(const(v) for v in vals)), {})
        return Formula("and", ()) if result else Formula("or", ())

    return Formula(op, args)


# ---------------------------------------------------------------------------
# Scripts

TAG_PATH = "path"
TAG_CHECKER = "checker"
TAG_REPAIR = "repair"


@dataclass
class TaggedAssert:
    """One assert line plus bookkeeping for slicing and script diffing."""

    formula: Formula
    tag: str = TAG_PATH
    origin: tuple[int, int] | None = None  # source span that produced it
    _vars: frozenset[str] | None = field(default=None, repr=False, compare=False)

    def variables(self) -> frozenset[str]:
        if self._vars is None:
            self._vars = vars_of(self.formula)
        return self._vars


class SmtScript:
    """Ordered declarations and tagged asserts with canonical rendering."""

    def __init__(self) -> None:
        self._decl_list: list[SsaVar] = []
        self._decl_map: dict[str, SsaVar] = {}
        self.asserts: list[TaggedAssert] = []

    @property
    def decls(self) -> list[SsaVar]:
        return self._decl_list

    def declared(self, name: str) -> SsaVar | None:
        return self._decl_map.get(name)

    def declare(self, v: SsaVar) -> None:
        if v.name not in self._decl_map:
            self._decl_list.append(v)
            self._decl_map[v.name] = v

    def add(self, formula: Formula, tag: str = TAG_PATH,
            origin: tuple[int, int] | None = None) -> None:
        self.asserts.append(TaggedAssert(formula, tag, origin))

    def snapshot(self) -> tuple[int, int]:
        return len(self._decl_list), len(self.asserts)

    def truncate(self, snap: tuple[int, int]) -> None:
        n_decls, n_asserts = snap
        for v in self._decl_list[n_decls:]:
            del self._decl_map[v.name]
        del self._decl_list[n_decls:]
        del self.asserts[n_asserts:]

    def copy(self) -> "SmtScript":
        dup = SmtScript()
        dup._decl_list = list(self._decl_list)
        dup._decl_map = dict(self._decl_map)
        dup.asserts = list(self.asserts)
        return dup

    def asserts_tagged(self, *tags: str) -> list[TaggedAssert]:
        return [a for a in self.asserts if a.tag in tags]

    def without_tag(self, tag: str) -> "SmtScript":
        dup = self.copy()
        dup.asserts = [a for a in dup.asserts if a.tag != tag]
        return dup


def slice_asserts(asserts: Iterable[TaggedAssert],
                  seed_vars: Iterable[str]) -> tuple[list[TaggedAssert], frozenset[str]]:
    """Dependency-closure slice: asserts transitively sharing a variable with the seeds.

    Scripts bind each variable before any use, so one backward pass computes
    the exact closure.  Returns the kept asserts (original order) and the
    closed variable set.
    """
    pool = list(asserts)
    reached: set[str] = set(seed_vars)
    kept_rev: list[TaggedAssert] = []
    for a in reversed(pool):
        avars = a.variables()
        if avars & reached:
            kept_rev.append(a)
            reached |= avars
    kept_rev.reverse()
    return kept_rev, frozenset(reached)


def sliced_script(script: SmtScript, seed_vars: Iterable[str]) -> SmtScript:
    """New script containing the dependency slice for ``seed_vars``."""
    kept, reached = slice_asserts(script.asserts, seed_vars)
    out = SmtScript()
    for v in script.decls:
        if v.name in reached:
            out.declare(v)
    out.asserts = list(kept)
    return out


def alpha_renamed_texts(decls: list[SsaVar], asserts: Iterable[TaggedAssert]) -> list[str]:
    """Assert lines with variables renamed by declaration order.

    Two runs of the analyzer may number SSA versions differently (discarded
    checker probes advance the counters); renaming to positional names makes
    scripts of the same path comparable across runs.
    """
    mapping = {v.name: f"v{i}" for i, v in enumerate(decls)}

    def rename(f: Formula) -> Formula:
        if f.op == "var":
            return Formula("var", (mapping.get(f.args[0], f.args[0]),))
        if f.op == "const":
            return f
        return Formula(f.op, tuple(rename(a) if isinstance(a, Formula) else a
                                   for a in f.args))

    return [to_sexpr(as_bool(rename(a.formula))) for a in asserts]


# ---------------------------------------------------------------------------
# Emission


def _tdiv_sexpr(a: str, b: str) -> str:
    # Truncating (C) division via Euclidean div over absolute values.
    return (
        f"(ite (>= {a} 0) "
        f"(ite (> {b} 0) (div {a} {b}) (- (div {a} (- {b})))) "
        f"(ite (> {b} 0) (- (div (- {a}) {b})) (div (- {a}) (- {b}))))"
    )


_SMT_OP = {
    "add": "+", "sub": "-", "mul": "*",
    "lt": "<", "le": "<=", "gt": ">", "ge": ">=", "eq": "=",
    "and": "and", "or": "or", "not": "not", "ite": "ite",
}


class _SqrtAux:
    """Allocates floor-sqrt helper variables during one emission."""

    def __init__(self) -> None:
        self.decls: list[str] = []
        self.asserts: list[str] = []
        self._count = 0

    def define(self, arg_sexpr: str) -> str:
        name = f"_sqrt_aux_{self._count}"
        self._count += 1
        self.decls.append(name)
        self.asserts.append(
            f"(assert (and (>= {name} 0) (<= (* {name} {name}) {arg_sexpr}) "
            f"(> (* (+ {name} 1) (+ {name} 1)) {arg_sexpr})))"
        )
        return name


def to_sexpr(f: Formula, aux: _SqrtAux | None = None) -> str:
    op = f.op
    if op == "const":
        n = f.args[0]
        return str(n) if n >= 0 else f"(- {-n})"
    if op == "var":
        return f.args[0]
    if op == "neg":
        return f"(- {to_sexpr(f.args[0], aux)})"
    if op == "ne":
        return f"(distinct {to_sexpr(f.args[0], aux)} {to_sexpr(f.args[1], aux)})"
    if op == "div":
        return _tdiv_sexpr(to_sexpr(f.args[0], aux), to_sexpr(f.args[1], aux))
    if op == "mod":
        a, b = to_sexpr(f.args[0], aux), to_sexpr(f.args[1], aux)
        return f"(- {a} (* {b} {_tdiv_sexpr(a, b)}))"
    if op == "sqrt":
        inner = normalize(f.args[0])
        if inner.is_const() and inner.value >= 0:
            return str(math.isqrt(inner.value))
        if aux is None:
            raise ValueError("symbolic sqrt outside script emission")
        return aux.define(to_sexpr(inner, aux))
    if op in ("and", "or") and not f.args:
        return "true" if op == "and" else "false"
    parts = " ".join(to_sexpr(a, aux) for a in f.args)
    return f"({_SMT_OP[op]} {parts})"


def emit(script: SmtScript, logic: str = "QF_NIA") -> str:
    """Canonical SMT-LIB v2 text: same decls and asserts give identical bytes."""
    declared = {v.name for v in script.decls}
    for a in script.asserts:
        missing = a.variables() - declared
        if missing:
            raise UndeclaredVariable(sorted(missing)[0])
    aux = _SqrtAux()
    assert_lines = [f"(assert {to_sexpr(as_bool(a.formula), aux)})" for a in script.asserts]
    lines = [f"(set-logic {logic})"]
    lines += [f"(declare-const {v.name} Int)" for v in script.decls]
    lines += [f"(declare-const {name} Int)" for name in aux.decls]
    lines += aux.asserts
    lines += assert_lines
    lines.append("(check-sat)")
    return "\n".join(lines) + "\n"
