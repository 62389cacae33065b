"""Path-sensitive symbolic interpretation of the C subset.

The analyzer walks each function's CFG depth-first, maintaining an SSA
environment per call frame and a single growing constraint script.  Branches
are validated against the solver on the dependency slice of their condition;
infeasible sides flip the newest unexplored decision and resume from a saved
snapshot, so the shared constraint prefix is never re-interpreted.  At every
assignment whose right-hand side is a top-level ``+`` or ``*`` the registered
checkers are notified before the assignment binds, giving them the
pre-truncation mathematical value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .bounds import INTEGER_TYPES, CType
from .cfg import (
    Cfg,
    CfgNode,
    CfgNodeKind,
    EXHAUSTED,
    FEASIBLE,
    INFEASIBLE,
    PathCursor,
    build_all,
    next_path,
)
from .checker import FaultReport, OverflowChecker, _const_value
from .config import AnalysisConfig
from .constraints import (
    Formula,
    SmtScript,
    SsaFactory,
    SsaVar,
    TAG_PATH,
    TaggedAssert,
    and_,
    as_bool,
    as_int,
    const,
    div,
    eq,
    ge,
    gt,
    le,
    lt,
    mod,
    mul,
    ne,
    neg,
    normalize,
    not_,
    or_,
    sliced_script,
    sqrt,
    sub,
    add,
    var,
    vars_of,
)
from .frontend.ast import AstNode, NodeKind, SourceUnit
from .solvers import SolverProtocolError, SolverResult, SolverTimeout, Verdict
from .stubs import STUB_TABLE, StubEffect, UnknownExtern

_TRUE = Formula("and", ())
_FALSE = Formula("or", ())


class _PathStop(Exception):
    """Raised when an abort-style stub terminates the current path."""


@dataclass
class Frame:
    serial: int
    fn_name: str
    cfg: Cfg
    node: int
    env: dict[str, SsaVar]
    call_site: AstNode | None = None
    call_values: dict[int, Formula] = field(default_factory=dict)
    return_value: Formula | None = None

    def copy(self) -> "Frame":
        return Frame(self.serial, self.fn_name, self.cfg, self.node,
                     dict(self.env), self.call_site, dict(self.call_values),
                     self.return_value)


@dataclass
class PathState:
    """Mutable per-path interpretation state."""

    frames: list[Frame]
    globals_env: dict[str, SsaVar]
    script: SmtScript
    cursor: PathCursor
    unroll_counts: dict[tuple[int, int], int] = field(default_factory=dict)
    named_consts_seen: dict[str, None] = field(default_factory=dict)
    branch_depth: int = 0
    hits_this_path: int = 0
    next_frame_serial: int = 1
    operand_formulas: dict[int, Formula] = field(default_factory=dict)

    @property
    def current_function(self) -> str:
        return self.frames[-1].fn_name if self.frames else ""

    def lookup(self, name: str) -> SsaVar | None:
        frame_env = self.frames[-1].env if self.frames else {}
        if name in frame_env:
            return frame_env[name]
        return self.globals_env.get(name)

    def bind(self, name: str, ssa_var: SsaVar) -> None:
        if self.frames and name in self.frames[-1].env:
            self.frames[-1].env[name] = ssa_var
        elif name in self.globals_env:
            self.globals_env[name] = ssa_var
        elif self.frames:
            self.frames[-1].env[name] = ssa_var
        else:
            self.globals_env[name] = ssa_var


@dataclass
class _Snapshot:
    script_snap: tuple[int, int]
    frames: list[Frame]
    globals_env: dict[str, SsaVar]
    unroll_counts: dict[tuple[int, int], int]
    named_consts: dict[str, None]
    hits: int
    next_frame_serial: int


@dataclass
class PathRecord:
    """Constraint view of one completed path (used by script dumping/diffing)."""

    decisions: list[tuple[int, bool, bool]]
    asserts: list[TaggedAssert]
    decls: list[SsaVar]
    terminated_early: bool = False


@dataclass
class AnalysisStats:
    paths_complete: int = 0
    paths_infeasible: int = 0
    node_visits: int = 0
    solver_queries: int = 0
    warnings: list[str] = field(default_factory=list)


@dataclass
class AnalysisResult:
    unit: SourceUnit
    reports: list[FaultReport]
    stats: AnalysisStats
    paths: list[PathRecord] = field(default_factory=list)


class Analyzer:
    """Drives path enumeration and checker notification over one source unit."""

    def __init__(self, unit: SourceUnit, config: AnalysisConfig | None = None,
                 checkers: list | None = None, collect_paths: bool = False,
                 path_filter: tuple[int, int] | None = None):
        self.unit = unit
        self.config = config or AnalysisConfig()
        self.profile = self.config.resolved_profile()
        self.solver = self.config.make_solver()
        self.cfgs = build_all(unit)
        self.ssa = SsaFactory()
        self.checkers = checkers if checkers is not None else [OverflowChecker()]
        self.stats = AnalysisStats()
        self.collect_paths = collect_paths
        self.path_filter = path_filter
        self.paths: list[PathRecord] = []
        self.externs: dict[str, CType] = {
            n.name: (n.declared_type or CType.VOID)
            for n in unit.walk() if n.kind is NodeKind.EXTERN_DECL
        }

    # -- public API ---------------------------------------------------------
    def run(self, entry: str | None = None) -> AnalysisResult:
        if entry is not None:
            entries = [entry]
        elif "main" in self.cfgs:
            entries = ["main"]
        else:
            entries = sorted(self.cfgs)
        for name in entries:
            if self._fault_budget_spent():
                break
            self._explore(name)
        reports = [r for c in self.checkers for r in getattr(c, "reports", [])]
        reports.sort(key=lambda r: (r.file, r.line, r.kind))
        return AnalysisResult(self.unit, reports, self.stats, self.paths)

    def solve(self, script: SmtScript) -> SolverResult:
        self.stats.solver_queries += 1
        try:
            result = self.solver.solve(script)
        except (SolverTimeout, SolverProtocolError) as exc:
            self.stats.warnings.append(f"solver error treated as unknown: {exc}")
            return SolverResult(Verdict.UNKNOWN, reason=str(exc))
        if result.verdict is Verdict.UNKNOWN:
            self.stats.warnings.append(
                f"solver returned unknown: {result.reason or 'no reason'}")
        return result

    # -- path enumeration -----------------------------------------------------
    def _fault_budget_spent(self) -> bool:
        if self.config.max_faults is None:
            return False
        total = sum(len(getattr(c, "reports", [])) for c in self.checkers)
        return total >= self.config.max_faults

    def _explore(self, entry_name: str) -> None:
        cursor = PathCursor()
        snapshots: dict[int, _Snapshot | None] = {}
        state = self._initial_state(entry_name, cursor)
        while True:
            complete = self._walk(state, snapshots)
            if complete:
                self.stats.paths_complete += 1
                self._record_path(state)
            else:
                self.stats.paths_infeasible += 1
            if self._fault_budget_spent():
                break
            total = self.stats.paths_complete + self.stats.paths_infeasible
            if total >= self.config.max_paths:
                self.stats.warnings.append("path budget exhausted; enumeration stopped")
                break
            nxt = next_path(cursor, FEASIBLE if complete else INFEASIBLE)
            if nxt is EXHAUSTED:
                break
            depth = cursor.checkpoint
            snap = snapshots.pop(depth)
            for k in [k for k in snapshots if k > depth]:
                del snapshots[k]
            state = self._restore(state, snap, cursor, depth)

    def _initial_state(self, entry_name: str, cursor: PathCursor) -> PathState:
        script = SmtScript()
        state = PathState(frames=[], globals_env={}, script=script, cursor=cursor)
        for decl in self.unit.decls:
            if decl.kind is not NodeKind.VAR_DECL:
                continue
            if decl.is_pointer:
                continue
            fresh = self.ssa.fresh(decl.name, decl.declared_type)
            script.declare(fresh)
            state.globals_env[decl.name] = fresh
            if decl.init is not None:
                value = _const_value(decl.init, self.profile)
                self._note_named_consts(state, decl.init)
                script.add(eq(var(fresh), const(value)), TAG_PATH, origin=decl.span)
            else:
                self._clamp(state, fresh)
        fn = self.unit.functions[entry_name]
        frame = Frame(0, entry_name, self.cfgs[entry_name], self.cfgs[entry_name].entry,
                      env={})
        for p in fn.params:
            fresh = self.ssa.fresh(p.name, p.declared_type)
            script.declare(fresh)
            frame.env[p.name] = fresh
            self._clamp(state, fresh)
        state.frames.append(frame)
        return state

    def _snapshot(self, state: PathState) -> _Snapshot:
        return _Snapshot(
            script_snap=state.script.snapshot(),
            frames=[f.copy() for f in state.frames],
            globals_env=dict(state.globals_env),
            unroll_counts=dict(state.unroll_counts),
            named_consts=dict(state.named_consts_seen),
            hits=state.hits_this_path,
            next_frame_serial=state.next_frame_serial,
        )

    def _restore(self, state: PathState, snap: _Snapshot | None,
                 cursor: PathCursor, depth: int) -> PathState:
        assert snap is not None, "backtracked to a forced decision"
        state.script.truncate(snap.script_snap)
        return PathState(
            frames=snap.frames,
            globals_env=snap.globals_env,
            script=state.script,
            cursor=cursor,
            unroll_counts=snap.unroll_counts,
            named_consts_seen=snap.named_consts,
            branch_depth=depth,
            hits_this_path=snap.hits,
            next_frame_serial=snap.next_frame_serial,
        )

    def _record_path(self, state: PathState, terminated_early: bool = False) -> None:
        if not self.collect_paths:
            return
        if self.path_filter is not None:
            lo, hi = self.path_filter
            if not any(a.origin and a.origin[0] < hi and a.origin[1] > lo
                       for a in state.script.asserts):
                return
        self.paths.append(PathRecord(
            decisions=[(d.node_id, d.taken, d.forced) for d in state.cursor.decisions],
            asserts=list(state.script.asserts),
            decls=list(state.script.decls),
            terminated_early=terminated_early,
        ))

    # -- traversal ------------------------------------------------------------
    def _walk(self, state: PathState, snapshots: dict[int, _Snapshot | None]) -> bool:
        """Run until the path completes (True) or a branch is infeasible (False)."""
        while True:
            frame = state.frames[-1]
            node = frame.cfg.node(frame.node)
            kind = node.kind
            if kind in (CfgNodeKind.ENTRY, CfgNodeKind.JOIN):
                frame.node = frame.cfg.successor(frame.node)
                continue
            if kind is CfgNodeKind.EXIT:
                if len(state.frames) == 1:
                    return True
                self._pop_frame(state)
                continue
            if kind is CfgNodeKind.STMT:
                try:
                    pushed = self._interpret(state, node)
                except _PathStop:
                    self._record_path(state, terminated_early=True)
                    return True
                if pushed:
                    continue
                frame.node = frame.cfg.successor(frame.node)
                continue
            if kind is CfgNodeKind.BRANCH:
                if not self._branch(state, node, snapshots):
                    return False
                continue
            raise AssertionError(kind)

    def _pop_frame(self, state: PathState) -> None:
        callee = state.frames.pop()
        caller = state.frames[-1]
        if callee.call_site is not None:
            value = callee.return_value
            if value is None:
                ret_type = self.unit.functions[callee.fn_name].declared_type
                if ret_type in INTEGER_TYPES:
                    fresh = self.ssa.fresh(f"{callee.fn_name}_ret", ret_type)
                    state.script.declare(fresh)
                    self._clamp(state, fresh)
                    value = var(fresh)
                else:
                    value = const(0)
            caller.call_values[id(callee.call_site)] = value

    def _branch(self, state: PathState, node: CfgNode,
                snapshots: dict[int, _Snapshot | None]) -> bool:
        frame = state.frames[-1]
        cursor = state.cursor
        depth = state.branch_depth
        loop_key = (frame.serial, node.id)
        forced: bool | None = None
        if node.loop_id is not None:
            if state.unroll_counts.get(loop_key, 0) >= self.config.unroll_bound:
                forced = False
        if depth == len(cursor.decisions):
            snapshots[depth] = None if forced is not None else self._snapshot(state)
        taken = cursor.decide(depth, node.id, forced=forced)
        state.branch_depth = depth + 1

        if node.cond is not None:
            self._note_named_consts(state, node.cond)
            cond_f = as_bool(self._eval(state, node.cond))
        else:
            cond_f = _TRUE
        f = normalize(cond_f if taken else not_(cond_f))
        if not self._feasible(state, f):
            return False
        if f != _TRUE:
            origin = node.cond.span if node.cond is not None else node.ast.span
            state.script.add(f, TAG_PATH, origin=origin)
        if node.loop_id is not None:
            if taken:
                state.unroll_counts[loop_key] = state.unroll_counts.get(loop_key, 0) + 1
            else:
                state.unroll_counts.pop(loop_key, None)
        frame.node = frame.cfg.successor(node.id, "true" if taken else "false")
        return True

    def _feasible(self, state: PathState, f: Formula) -> bool:
        if f == _TRUE:
            return True
        if f == _FALSE:
            return False
        seeds = vars_of(f)
        if not seeds:
            f2 = normalize(f)
            return not f2 == _FALSE
        query = sliced_script(state.script, seeds)
        for name in seeds:
            decl = state.script.declared(name)
            if decl is not None:
                query.declare(decl)
        query.add(f, TAG_PATH)
        result = self.solve(query)
        return result.verdict is not Verdict.UNSAT

    # -- statement interpretation ----------------------------------------------
    def _interpret(self, state: PathState, node: CfgNode) -> bool:
        """Interpret a statement; returns True when a callee frame was pushed
        (the statement will be revisited once the call returns)."""
        stmt = node.ast
        frame = state.frames[-1]
        pending = self._next_user_call(state, frame, stmt)
        if pending is not None:
            self._push_call(state, pending)
            return True

        self.stats.node_visits += 1
        k = stmt.kind
        if k is NodeKind.VAR_DECL:
            if stmt.is_pointer:
                if stmt.init is not None:
                    self._eval(state, stmt.init)
                return False
            if stmt.init is None:
                fresh = self.ssa.fresh(stmt.name, stmt.declared_type)
                state.script.declare(fresh)
                frame.env[stmt.name] = fresh
                self._clamp(state, fresh)
                return False
            self._assign(state, stmt, stmt.name, stmt.declared_type, stmt.init,
                         declare_local=True)
            return False
        if k is NodeKind.ASSIGN:
            target = stmt.target
            existing = state.lookup(target.name)
            if existing is None and target.ctype is CType.PTR:
                self._eval(state, stmt.assigned_expr)
                return False
            self._assign(state, stmt, target.name, stmt.ctype, stmt.assigned_expr,
                         declare_local=False)
            return False
        if k is NodeKind.CALL:
            self._eval(state, stmt)
            return False
        if k is NodeKind.RETURN:
            expr = stmt.return_expr
            frame.return_value = self._eval(state, expr) if expr is not None else None
            return False
        raise AssertionError(k)

    def _assign(self, state: PathState, stmt: AstNode, name: str,
                ctype: CType, rhs: AstNode, declare_local: bool) -> None:
        if ctype is CType.PTR or ctype not in INTEGER_TYPES:
            self._eval(state, rhs)
            return
        self._note_named_consts(state, rhs)
        state.operand_formulas = {}
        rhs_formula = self._eval(state, rhs, cache=True)
        if rhs.kind is NodeKind.BINARY and rhs.op in ("+", "*"):
            limit = self.config.first_n_per_path
            if (limit is None or state.hits_this_path < limit) \
                    and not self._fault_budget_spent():
                for checker in self.checkers:
                    new = checker.notify(self, state, stmt, rhs, rhs_formula)
                    state.hits_this_path += len(new or [])
        fresh = self.ssa.fresh(name, ctype)
        state.script.declare(fresh)
        state.script.add(eq(var(fresh), normalize(rhs_formula)), TAG_PATH,
                         origin=stmt.span)
        if declare_local:
            state.frames[-1].env[name] = fresh
        else:
            state.bind(name, fresh)

    # -- calls -------------------------------------------------------------
    def _next_user_call(self, state: PathState, frame: Frame,
                        stmt: AstNode) -> AstNode | None:
        roots: list[AstNode] = []
        k = stmt.kind
        if k is NodeKind.VAR_DECL and stmt.init is not None:
            roots = [stmt.init]
        elif k is NodeKind.ASSIGN:
            roots = [stmt.assigned_expr]
        elif k is NodeKind.CALL:
            roots = [stmt]
        elif k is NodeKind.RETURN and stmt.return_expr is not None:
            roots = [stmt.return_expr]
        for root in roots:
            for sub_node in _postorder(root):
                if sub_node.kind is not NodeKind.CALL:
                    continue
                if sub_node.name not in self.cfgs:
                    continue
                if id(sub_node) in frame.call_values:
                    continue
                if len(state.frames) >= self.config.call_depth:
                    fn = self.unit.functions[sub_node.name]
                    if fn.declared_type in INTEGER_TYPES:
                        fresh = self.ssa.fresh(f"{sub_node.name}_ret", fn.declared_type)
                        state.script.declare(fresh)
                        self._clamp(state, fresh)
                        frame.call_values[id(sub_node)] = var(fresh)
                    else:
                        frame.call_values[id(sub_node)] = const(0)
                    continue
                return sub_node
        return None

    def _push_call(self, state: PathState, call_node: AstNode) -> None:
        fn = self.unit.functions[call_node.name]
        cfg = self.cfgs[call_node.name]
        args = [self._eval(state, a) for a in call_node.args]
        frame = Frame(state.next_frame_serial, call_node.name, cfg, cfg.entry,
                      env={}, call_site=call_node)
        state.next_frame_serial += 1
        for p, a_formula in zip(fn.params, args):
            fresh = self.ssa.fresh(p.name, p.declared_type)
            state.script.declare(fresh)
            state.script.add(eq(var(fresh), normalize(a_formula)), TAG_PATH,
                             origin=call_node.span)
            frame.env[p.name] = fresh
        state.frames.append(frame)

    # -- expression evaluation ------------------------------------------------
    def _eval(self, state: PathState, node: AstNode, cache: bool = False) -> Formula:
        f = self._eval_inner(state, node, cache)
        if cache:
            state.operand_formulas[id(node)] = f
        return f

    def _eval_inner(self, state: PathState, node: AstNode, cache: bool) -> Formula:
        k = node.kind
        if k is NodeKind.INT_LITERAL:
            return const(node.value)
        if k is NodeKind.STR_LITERAL:
            return const(0)
        if k is NodeKind.IDENT:
            if node.is_limit_const:
                state.named_consts_seen.setdefault(node.name)
                value, _ = self.profile.named_constant(node.name)
                return const(value)
            ssa_var = state.lookup(node.name)
            if ssa_var is None:
                return const(0)  # opaque handle (stream/pointer)
            return var(ssa_var)
        if k is NodeKind.UNARY:
            if node.op == "&":
                return const(0)  # effect handled by the enclosing stub call
            inner = self._eval(state, node.operand, cache)
            if node.op == "-":
                return neg(as_int(inner))
            return not_(as_bool(inner))
        if k is NodeKind.CAST:
            return self._eval(state, node.operand, cache)
        if k is NodeKind.BINARY:
            left = self._eval(state, node.lhs, cache)
            right = self._eval(state, node.rhs, cache)
            op = node.op
            if op == "&&":
                return and_(as_bool(left), as_bool(right))
            if op == "||":
                return or_(as_bool(left), as_bool(right))
            li, ri = as_int(left), as_int(right)
            table = {"+": add, "-": sub, "*": mul, "/": div, "%": mod,
                     "<": lt, "<=": le, ">": gt, ">=": ge, "==": eq, "!=": ne}
            return table[op](li, ri)
        if k is NodeKind.CALL:
            return self._eval_call(state, node, cache)
        raise AssertionError(k)

    def _eval_call(self, state: PathState, node: AstNode, cache: bool) -> Formula:
        frame = state.frames[-1]
        if node.name in self.cfgs:
            value = frame.call_values.get(id(node))
            assert value is not None, f"unresolved user call {node.name}"
            return value
        stub = STUB_TABLE.get(node.name)
        if stub is None:
            if node.name in self.externs:
                ret = self.externs[node.name]
                if ret in INTEGER_TYPES:
                    fresh = self.ssa.fresh(f"{node.name}_ret", ret)
                    state.script.declare(fresh)
                    self._clamp(state, fresh)
                    return var(fresh)
                return const(0)
            raise UnknownExtern(node.name)
        effect = stub.effect
        if effect is StubEffect.INTRINSIC:
            return sqrt(as_int(self._eval(state, node.args[0], cache)))
        if effect is StubEffect.TERMINATE:
            raise _PathStop()
        if effect is StubEffect.HANDLER:
            if self.config.handler_die:
                raise _PathStop()
            return const(0)
        if effect is StubEffect.NOOP:
            for a in node.args:
                self._eval(state, a, cache)
            return const(0)
        if effect is StubEffect.FRESH_RETURN:
            fresh = self.ssa.fresh(stub.name, stub.return_type)
            state.script.declare(fresh)
            if self.config.clamp_inputs and stub.range_policy == "rand":
                state.script.add(
                    and_(ge(var(fresh), const(0)),
                         le(var(fresh), const(self.profile.max_of(stub.return_type)))),
                    TAG_PATH, origin=node.span)
            return var(fresh)
        if effect is StubEffect.HAVOC_ARGS:
            for a in node.args:
                if a.kind is NodeKind.UNARY and a.op == "&":
                    target = a.operand
                    old = state.lookup(target.name)
                    ctype = old.declared_ctype if old else target.ctype
                    fresh = self.ssa.fresh(target.name, ctype)
                    state.script.declare(fresh)
                    state.bind(target.name, fresh)
                    self._clamp(state, fresh)
                else:
                    self._eval(state, a, cache)
            fresh = self.ssa.fresh(f"{stub.name}_ret", stub.return_type)
            state.script.declare(fresh)
            self._clamp(state, fresh)
            return var(fresh)
        raise AssertionError(effect)

    # -- helpers -----------------------------------------------------------
    def _clamp(self, state: PathState, ssa_var: SsaVar) -> None:
        if not self.config.clamp_inputs:
            return
        if ssa_var.declared_ctype not in INTEGER_TYPES:
            return
        b = self.profile.bounds(ssa_var.declared_ctype)
        state.script.add(
            and_(ge(var(ssa_var), const(b.min_val)), le(var(ssa_var), const(b.max_val))),
            TAG_PATH)

    def _note_named_consts(self, state: PathState, node: AstNode) -> None:
        for sub_node in node.walk():
            if sub_node.kind is NodeKind.IDENT and sub_node.is_limit_const:
                state.named_consts_seen.setdefault(sub_node.name)


def _postorder(node: AstNode):
    for child in node.children:
        yield from _postorder(child)
    yield node


def analyze_text(path: str, text: str, config: AnalysisConfig | None = None,
                 entry: str | None = None, collect_paths: bool = False) -> AnalysisResult:
    """Parse, type-check, and analyze one source text."""
    from .frontend import parse, resolve_types

    unit = resolve_types(parse(path, text))
    analyzer = Analyzer(unit, config, collect_paths=collect_paths)
    return analyzer.run(entry=entry)


def analyze_file(path: str, config: AnalysisConfig | None = None,
                 entry: str | None = None, collect_paths: bool = False) -> AnalysisResult:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return analyze_text(path, text, config, entry=entry, collect_paths=collect_paths)
