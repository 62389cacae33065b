"""Integer overflow/underflow checking at fault-prone statements.

The checker is notified at every assignment whose right-hand side is a
top-level ``+`` or ``*``.  It classifies the statement shape, introduces a
mathematical stand-in variable for the result (so the query sees the
pre-truncation value), asserts a bound violation, and asks the solver whether
any input along the current path reaches it.  A satisfiable query produces one
fault report per (statement, bound kind) for the whole run.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

from .bounds import SIGNED_TYPES, BoundsProfile, CType, IntBounds
from .constraints import (
    Formula,
    SmtScript,
    SsaVar,
    TAG_CHECKER,
    TaggedAssert,
    const,
    eq,
    gt,
    lt,
    sliced_script,
    var,
)
from .frontend.ast import AstNode, NodeKind

CHECKER_ID_OVERFLOW = "ID-Integer_Overflow_Fault"
CHECKER_ID_UNDERFLOW = "ID-Integer_Underflow_Fault"

KIND_OVERFLOW = "overflow"
KIND_UNDERFLOW = "underflow"


class Shape(Enum):
    ADD_CONST = "AddConst"
    MUL_NEG_CONST = "MulNegConst"
    MUL_EQUAL = "MulEqual"
    GENERIC_ADD = "GenericAdd"
    GENERIC_MUL = "GenericMul"


OPERAND_CONSTANT = "constant"
OPERAND_VARIABLE = "variable"
OPERAND_SIDE_EFFECT = "sideEffect"
OPERAND_COMPLEX = "complex"


@dataclass
class Operand:
    node: AstNode
    text: str
    kind: str                    # constant / variable / sideEffect / complex
    formula: Formula | None = None
    # For constants the value may depend on the active profile (named limit
    # constants); sign is profile-independent.
    const_node: AstNode | None = None

    def const_value(self, profile: BoundsProfile) -> int | None:
        if self.kind != OPERAND_CONSTANT:
            return None
        return _const_value(self.node, profile)


def _const_value(node: AstNode, profile: BoundsProfile) -> int | None:
    if node.kind is NodeKind.INT_LITERAL:
        return node.value
    if node.kind is NodeKind.IDENT and node.is_limit_const:
        hit = profile.named_constant(node.name)
        return hit[0] if hit else None
    if node.kind is NodeKind.UNARY and node.op == "-":
        inner = _const_value(node.operand, profile)
        return -inner if inner is not None else None
    if node.kind is NodeKind.CAST:
        return _const_value(node.operand, profile)
    return None


def _operand_kind(node: AstNode, profile: BoundsProfile) -> str:
    if _const_value(node, profile) is not None:
        return OPERAND_CONSTANT
    if node.kind is NodeKind.IDENT:
        return OPERAND_VARIABLE
    if node.kind is NodeKind.CALL:
        return OPERAND_SIDE_EFFECT
    return OPERAND_COMPLEX


@dataclass
class ShapeInfo:
    shape: Shape
    operator: str                 # "+" or "*"
    left: Operand
    right: Operand
    operands_equal: bool          # textually identical identifier operands
    result_type: CType

    @property
    def variable_operand(self) -> Operand:
        """The non-constant side for const-paired shapes."""
        if self.left.kind == OPERAND_CONSTANT:
            return self.right
        return self.left

    @property
    def constant_operand(self) -> Operand | None:
        if self.left.kind == OPERAND_CONSTANT:
            return self.left
        if self.right.kind == OPERAND_CONSTANT:
            return self.right
        return None


def classify_shape(rhs: AstNode, snippet, profile: BoundsProfile) -> ShapeInfo | None:
    """Shape of an assignment RHS whose top operator is + or *; None otherwise."""
    if rhs.kind is not NodeKind.BINARY or rhs.op not in ("+", "*"):
        return None
    left = Operand(rhs.lhs, snippet(rhs.lhs.span), _operand_kind(rhs.lhs, profile))
    right = Operand(rhs.rhs, snippet(rhs.rhs.span), _operand_kind(rhs.rhs, profile))
    equal = (left.kind == OPERAND_VARIABLE and right.kind == OPERAND_VARIABLE
             and left.text == right.text)
    result_type = rhs.ctype
    op = rhs.op

    if op == "+":
        shape = Shape.GENERIC_ADD
        for a, b in ((left, right), (right, left)):
            cv = a.const_value(profile)
            if cv is not None and cv > 0 and b.kind != OPERAND_CONSTANT:
                shape = Shape.ADD_CONST
                break
    else:
        if equal:
            shape = Shape.MUL_EQUAL
        else:
            shape = Shape.GENERIC_MUL
            if result_type in SIGNED_TYPES:
                for a, b in ((left, right), (right, left)):
                    cv = a.const_value(profile)
                    if cv is not None and cv < 0 and b.kind != OPERAND_CONSTANT:
                        shape = Shape.MUL_NEG_CONST
                        break
    return ShapeInfo(shape, op, left, right, equal, result_type)


def shape_can_underflow(shape: Shape) -> bool:
    # A positive-constant add cannot go below the minimum of its own terms'
    # types, and a square is never negative; the rest have a < disjunct.
    return shape in (Shape.MUL_NEG_CONST, Shape.GENERIC_ADD, Shape.GENERIC_MUL)


@dataclass
class FaultReport:
    problem_id: str
    checker_id: str
    kind: str                     # overflow / underflow
    file: str
    function: str
    line: int
    span: tuple[int, int]
    statement_text: str
    target_var: SsaVar
    dependent_vars: list[SsaVar]
    detection_script: SmtScript   # sliced system incl. checker asserts
    path_asserts: list[TaggedAssert]
    path_decls: list[SsaVar]
    bounds: IntBounds
    shape: ShapeInfo
    stmt_node: AstNode
    rhs_node: AstNode
    rhs_formula: Formula
    named_consts_seen: tuple[str, ...]
    decisions: list = field(default_factory=list)
    witness: dict[str, int] | None = None

    def to_json(self) -> dict:
        doc = {
            "problemId": self.problem_id,
            "checkerId": self.checker_id,
            "file": os.path.basename(self.file),
            "function": self.function,
            "line": self.line,
            "statement": self.statement_text,
            "shape": self.shape.shape.value,
            "typeName": str(self.bounds.type_name),
        }
        if self.witness:
            doc["witness"] = dict(sorted(self.witness.items()))
        return doc


def effective_result_type(stored_type: CType, computed_type: CType) -> CType:
    """Narrower of the assignment's storage type and its computation type.

    Usual promotions make ``short r = a + b`` compute in int; the value that
    must fit is still a short.  Conversely ``int64_t r = i * j`` computes in
    int, and that is where the wraparound happens.
    """
    from .bounds import FULL_LIMITS

    if stored_type not in FULL_LIMITS or computed_type not in FULL_LIMITS:
        return computed_type if computed_type in FULL_LIMITS else stored_type
    if FULL_LIMITS[stored_type] <= FULL_LIMITS[computed_type]:
        return stored_type
    return computed_type


def select_bounds(named_seen, result_type: CType, profile: BoundsProfile) -> IntBounds:
    """Bounds for a fault-prone statement.

    A limit constant referenced on the path wins (the one matching the result
    type if several were seen, else the first); otherwise the result
    expression's resolved type decides.
    """
    candidates = [profile.named_constant(name) for name in named_seen]
    types_seen = [hit[1] for hit in candidates if hit is not None]
    if types_seen:
        if result_type in types_seen:
            return profile.bounds(result_type)
        return profile.bounds(types_seen[0])
    return profile.bounds(result_type)


class OverflowChecker:
    """The CWE-190/191 checker; register with an analyzer to receive
    fault-prone statement notifications."""

    def __init__(self) -> None:
        self.reports: list[FaultReport] = []
        self._seen: set[tuple[tuple[int, int], str]] = set()

    def notify(self, analyzer, state, stmt: AstNode, rhs: AstNode,
               rhs_formula: Formula) -> list[FaultReport]:
        profile = analyzer.profile
        shape = classify_shape(rhs, analyzer.unit.snippet, profile)
        if shape is None:
            return []
        result_type = effective_result_type(stmt.ctype, rhs.ctype)
        bounds = select_bounds(state.named_consts_seen, result_type, profile)
        new_reports: list[FaultReport] = []
        kinds = [KIND_OVERFLOW]
        if shape_can_underflow(shape.shape):
            kinds.append(KIND_UNDERFLOW)
        for kind in kinds:
            key = (stmt.span, kind)
            if key in self._seen:
                continue
            report = self._query(analyzer, state, stmt, rhs, rhs_formula,
                                 shape, bounds, kind)
            if report is not None:
                self._seen.add(key)
                self.reports.append(report)
                new_reports.append(report)
        return new_reports

    def _query(self, analyzer, state, stmt, rhs, rhs_formula, shape, bounds,
               kind) -> FaultReport | None:
        script = state.script
        snap = script.snapshot()
        target_base = stmt.name if stmt.kind is NodeKind.VAR_DECL else stmt.target.name
        target = analyzer.ssa.fresh(target_base, rhs.ctype)
        script.declare(target)
        script.add(eq(var(target), rhs_formula), TAG_CHECKER, origin=stmt.span)
        if kind == KIND_OVERFLOW:
            violation = gt(var(target), const(bounds.max_val))
        else:
            violation = lt(var(target), const(bounds.min_val))
        script.add(violation, TAG_CHECKER, origin=stmt.span)
        try:
            sliced = sliced_script(script, {target.name})
            result = analyzer.solve(sliced)
            if not result.is_sat:
                return None
            dependents = [v for v in sliced.decls if v.name != target.name]
            detection = sliced
            line = analyzer.unit.line_of(stmt.span)
            file_name = os.path.basename(analyzer.unit.path)
            checker_id = (CHECKER_ID_OVERFLOW if kind == KIND_OVERFLOW
                          else CHECKER_ID_UNDERFLOW)
            shape.left.formula = state.operand_formulas.get(id(shape.left.node))
            shape.right.formula = state.operand_formulas.get(id(shape.right.node))
            return FaultReport(
                problem_id=f"{file_name}:{line}:{kind}",
                checker_id=checker_id,
                kind=kind,
                file=analyzer.unit.path,
                function=state.current_function,
                line=line,
                span=stmt.span,
                statement_text=analyzer.unit.snippet(stmt.span),
                target_var=target,
                dependent_vars=dependents,
                detection_script=detection,
                path_asserts=list(script.asserts_tagged("path")),
                path_decls=[v for v in script.decls if v.name != target.name],
                bounds=bounds,
                shape=shape,
                stmt_node=stmt,
                rhs_node=rhs,
                rhs_formula=rhs_formula,
                named_consts_seen=tuple(state.named_consts_seen),
                decisions=[(d.node_id, d.taken, d.forced) for d in state.cursor.decisions],
                witness=result.model,
            )
        finally:
            script.truncate(snap)
