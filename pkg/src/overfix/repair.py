"""Repair generation for reported integer overflow/underflow faults.

The pipeline mirrors the detection machinery in reverse: determine the bound
in effect, capture the constraint system that proved the fault, re-constrain
the overflowing variable to show a safe interval exists, pick a guard pattern
via the criteria table, instantiate it with the statement's own operand text,
and prove the guarded system can no longer reach the violation while still
admitting ordinary inputs.  A candidate that passes is "valid"; it becomes
"correct" once re-analysis of the rewritten file shows the fault gone and
nothing new introduced.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable

from .bounds import (
    MAX_CONSTANT_NAMES,
    MIN_CONSTANT_NAMES,
    SIGNED_TYPES,
    BoundsProfile,
    CType,
    IntBounds,
)
from .checker import (
    FaultReport,
    KIND_OVERFLOW,
    OPERAND_CONSTANT,
    OPERAND_SIDE_EFFECT,
    OPERAND_VARIABLE,
    Shape,
    effective_result_type,
    select_bounds,
)
from .config import AnalysisConfig
from .constraints import (
    Formula,
    SmtScript,
    SsaVar,
    TAG_CHECKER,
    TAG_PATH,
    TAG_REPAIR,
    alpha_renamed_texts,
    and_,
    as_bool,
    as_int,
    const,
    eq,
    floor_sqrt,
    ge,
    gt,
    le,
    lt,
    ne,
    neg,
    normalize,
    not_,
    sqrt,
    var,
    vars_of,
)
from .frontend import parse, resolve_types
from .frontend.ast import AstNode, NodeKind, SourceUnit
from .solvers import Verdict


# ---------------------------------------------------------------------------
# Criteria and pattern catalog


@dataclass(frozen=True)
class StatementFacts:
    """Everything the criteria may inspect, decidable from the statement AST."""

    operator: str
    result_type: CType
    lhs_kind: str
    rhs_kind: str
    operands_equal: bool
    positive_const_pair: bool   # one positive constant + one non-constant
    negative_const_pair: bool


def facts_for(report: FaultReport, profile: BoundsProfile) -> StatementFacts:
    shape = report.shape
    lv = shape.left.const_value(profile)
    rv = shape.right.const_value(profile)
    pos_pair = ((lv is not None and lv > 0 and rv is None)
                or (rv is not None and rv > 0 and lv is None))
    neg_pair = ((lv is not None and lv < 0 and rv is None)
                or (rv is not None and rv < 0 and lv is None))
    return StatementFacts(
        operator=shape.operator,
        result_type=shape.result_type,
        lhs_kind=shape.left.kind,
        rhs_kind=shape.right.kind,
        operands_equal=shape.operands_equal,
        positive_const_pair=pos_pair,
        negative_const_pair=neg_pair,
    )


@dataclass(frozen=True)
class PatternCriterion:
    id: str
    description: str
    predicate: Callable[[StatementFacts], bool]


_SIMPLE_KINDS = (OPERAND_CONSTANT, OPERAND_VARIABLE, OPERAND_SIDE_EFFECT)

CRITERIA: list[PatternCriterion] = [
    PatternCriterion("C1", "operator is +", lambda f: f.operator == "+"),
    PatternCriterion("C2", "operator is *", lambda f: f.operator == "*"),
    PatternCriterion("C3", "result is char", lambda f: f.result_type is CType.CHAR),
    PatternCriterion("C4", "result is short", lambda f: f.result_type is CType.SHORT),
    PatternCriterion("C5", "result is int", lambda f: f.result_type is CType.INT),
    PatternCriterion("C6", "result is unsigned int", lambda f: f.result_type is CType.UINT),
    PatternCriterion("C7", "result is int64_t", lambda f: f.result_type is CType.INT64),
    PatternCriterion("C8", "left operand is a constant",
                     lambda f: f.lhs_kind == OPERAND_CONSTANT),
    PatternCriterion("C9", "left operand is a plain variable",
                     lambda f: f.lhs_kind == OPERAND_VARIABLE),
    PatternCriterion("C10", "left operand has side effects",
                     lambda f: f.lhs_kind == OPERAND_SIDE_EFFECT),
    PatternCriterion("C11", "right operand is a constant",
                     lambda f: f.rhs_kind == OPERAND_CONSTANT),
    PatternCriterion("C12", "right operand is a plain variable",
                     lambda f: f.rhs_kind == OPERAND_VARIABLE),
    PatternCriterion("C13", "right operand has side effects",
                     lambda f: f.rhs_kind == OPERAND_SIDE_EFFECT),
    PatternCriterion("C14", "operands are textually equal",
                     lambda f: f.operands_equal),
    PatternCriterion("C15", "positive constant paired with a non-constant",
                     lambda f: f.positive_const_pair),
    PatternCriterion("C16", "negative constant paired with a non-constant",
                     lambda f: f.negative_const_pair),
    PatternCriterion("C17", "both operands are non-constant",
                     lambda f: f.lhs_kind != OPERAND_CONSTANT
                     and f.rhs_kind != OPERAND_CONSTANT),
    PatternCriterion("C18", "result type is signed",
                     lambda f: f.result_type in SIGNED_TYPES),
    PatternCriterion("C19", "both operands are simple values",
                     lambda f: f.lhs_kind in _SIMPLE_KINDS
                     and f.rhs_kind in _SIMPLE_KINDS),
]

_CRITERIA_BY_ID = {c.id: c for c in CRITERIA}


@dataclass(frozen=True)
class RepairPattern:
    id: str
    shape: Shape
    required: tuple[str, ...]   # all must hold
    counted: tuple[str, ...]    # ranked by how many of these hold


# Catalog order is the tie-break order: the most specific guards come first.
PATTERNS: list[RepairPattern] = [
    RepairPattern("mul-equal-guard", Shape.MUL_EQUAL,
                  required=("C2", "C14"), counted=("C2", "C14", "C9", "C12")),
    RepairPattern("mul-neg-const-guard", Shape.MUL_NEG_CONST,
                  required=("C2", "C16", "C18"), counted=("C2", "C16", "C18")),
    RepairPattern("add-const-guard", Shape.ADD_CONST,
                  required=("C1", "C15"), counted=("C1", "C15")),
    RepairPattern("generic-add-guard", Shape.GENERIC_ADD,
                  required=("C1", "C19"), counted=("C1", "C19")),
    RepairPattern("generic-mul-guard", Shape.GENERIC_MUL,
                  required=("C2", "C19"), counted=("C2", "C19")),
]

FAULT_FAMILY = "integer-bound"
_KNOWN_CHECKER_IDS = {"ID-Integer_Overflow_Fault", "ID-Integer_Underflow_Fault"}


# ---------------------------------------------------------------------------
# Steps 1-5: bounds, capture, constraint vars, re-constraining, fault family


@dataclass
class Capture:
    """The five items stored about a detected fault."""

    report: FaultReport
    statement_text: str
    detection_script: SmtScript
    checker_id: str
    target_var: SsaVar
    dependent_vars: list[SsaVar]


def determine_bounds(report: FaultReport, profile: BoundsProfile) -> IntBounds:
    """Step 1: limit constant referenced on the path wins, else the result type."""
    result_type = effective_result_type(report.stmt_node.ctype, report.rhs_node.ctype)
    return select_bounds(report.named_consts_seen, result_type, profile)


def capture_system(report: FaultReport) -> Capture:
    """Step 2: statement text, detection script, checker id, target, dependents."""
    return Capture(
        report=report,
        statement_text=report.statement_text,
        detection_script=report.detection_script,
        checker_id=report.checker_id,
        target_var=report.target_var,
        dependent_vars=list(report.dependent_vars),
    )


def select_constraint_vars(capture: Capture) -> list[SsaVar]:
    """Step 3: the target variable first, then the non-constant direct operands."""
    out = [capture.target_var]
    seen = {capture.target_var.name}
    shape = capture.report.shape
    for operand in (shape.left, shape.right):
        f = operand.formula
        if f is None or operand.kind == OPERAND_CONSTANT:
            continue
        for name in sorted(vars_of(f)):
            if name in seen:
                continue
            decl = capture.detection_script.declared(name)
            if decl is not None:
                out.append(decl)
                seen.add(name)
    return out


@dataclass
class SafeInterval:
    subject: SsaVar
    low: int
    high: int


class StillOverflows:
    """Step 4 outcome: no admissible range avoids the violation."""

    def __repr__(self) -> str:
        return "StillOverflows"


STILL_OVERFLOWS = StillOverflows()


def _violation_formula(capture: Capture) -> Formula:
    # last checker-tagged assert is the bound violation
    checker_asserts = capture.detection_script.asserts_tagged(TAG_CHECKER)
    return checker_asserts[-1].formula


def _defining_asserts(capture: Capture):
    checker_asserts = capture.detection_script.asserts_tagged(TAG_CHECKER)
    return checker_asserts[:-1]


def reconstrain_and_check(capture: Capture, bounds: IntBounds, solver,
                          profile: BoundsProfile) -> SafeInterval | StillOverflows:
    """Step 4: negate the bound violation and re-solve.

    The violation asserts are replaced by in-range constraints on the subject
    variable; the interval is accepted when some in-range execution exists and
    re-adding the violation under it is unsatisfiable.
    """
    report = capture.report
    shape = report.shape
    if shape.shape is Shape.MUL_EQUAL and shape.left.formula is not None \
            and shape.left.formula.op == "var":
        name = shape.left.formula.var_name
        subject = capture.detection_script.declared(name) or capture.target_var
        fs = floor_sqrt(bounds.max_val)
        low, high = -fs, fs
    else:
        subject = capture.target_var
        low, high = bounds.min_val, bounds.max_val

    base = SmtScript()
    for v in capture.detection_script.decls:
        base.declare(v)
    for a in capture.detection_script.asserts_tagged(TAG_PATH):
        base.asserts.append(a)
    for a in _defining_asserts(capture):
        base.asserts.append(a)
    base.add(ge(var(subject), const(low)), TAG_REPAIR)
    base.add(le(var(subject), const(high)), TAG_REPAIR)

    reachable = solver.solve(base)
    if not reachable.is_sat:
        return STILL_OVERFLOWS
    recheck = base.copy()
    recheck.add(_violation_formula(capture), TAG_CHECKER)
    if solver.solve(recheck).is_sat:
        return STILL_OVERFLOWS
    return SafeInterval(subject, low, high)


def classify_fault(capture: Capture) -> str | None:
    """Step 5: map the stored checker id onto a repair pattern family."""
    checker_id = capture.checker_id
    if not checker_id:
        raise ValueError("capture has no checker id")
    if checker_id in _KNOWN_CHECKER_IDS:
        return FAULT_FAMILY
    return None  # NoPatternsApplicable


def select_pattern(capture: Capture, profile: BoundsProfile) -> list[tuple[RepairPattern, list[str]]]:
    """Step 6: rank patterns by satisfied criteria count (catalog order ties)."""
    facts = facts_for(capture.report, profile)
    matched_all = [c.id for c in CRITERIA if c.predicate(facts)]
    matched_set = set(matched_all)
    ranked: list[tuple[int, int, RepairPattern, list[str]]] = []
    for order, pattern in enumerate(PATTERNS):
        if not all(cid in matched_set for cid in pattern.required):
            continue
        count = sum(1 for cid in pattern.counted if cid in matched_set)
        if count < 2:
            continue
        ranked.append((-count, order, pattern, matched_all))
    ranked.sort()
    return [(p, m) for _, _, p, m in ranked]


# ---------------------------------------------------------------------------
# Guard rendering (Step 8 text) and guard formulas (Step 7 semantics)


def _max_name(bounds: IntBounds) -> str:
    return MAX_CONSTANT_NAMES[bounds.type_name]


def _min_name(bounds: IntBounds) -> str:
    if bounds.type_name not in MIN_CONSTANT_NAMES:
        return "0"  # unsigned
    return MIN_CONSTANT_NAMES[bounds.type_name]


def _sqrt_text(bounds: IntBounds, config: AnalysisConfig, negated: bool) -> str:
    if not config.fold_sqrt:
        base = f"sqrt({_max_name(bounds)})"
        return f"-{base}" if negated else base
    fs = floor_sqrt(bounds.max_val)
    ceil_s = fs if fs * fs == bounds.max_val else fs + 1
    # thresholds keep ">="/"<" semantics of the real square root
    return f"-{fs}" if negated else f"{ceil_s}"


def guard_text(pattern: RepairPattern, report: FaultReport, bounds: IntBounds,
               config: AnalysisConfig, left_text: str, right_text: str) -> str:
    shape = report.shape
    max_n, min_n = _max_name(bounds), _min_name(bounds)
    if pattern.shape is Shape.MUL_EQUAL:
        s1 = left_text
        sq = _sqrt_text(bounds, config, negated=False)
        nsq = _sqrt_text(bounds, config, negated=True)
        return f"({s1} > 0 && {s1} >= {sq}) || ({s1} < 0 && {s1} < {nsq})"
    if pattern.shape is Shape.ADD_CONST:
        if shape.left.kind == OPERAND_CONSTANT:
            c, s1 = left_text, right_text
        else:
            c, s1 = right_text, left_text
        return f"({s1} > 0 && {s1} > ({max_n} - {c}))"
    if pattern.shape is Shape.MUL_NEG_CONST:
        if shape.left.kind == OPERAND_CONSTANT:
            c, s1 = left_text, right_text
        else:
            c, s1 = right_text, left_text
        return (f"(({s1} > 0 && {s1} > ({min_n} / {c})) || "
                f"({s1} < 0 && {s1} < ({max_n} / {c})))")
    if pattern.shape is Shape.GENERIC_ADD:
        x, y = left_text, right_text
        return (f"(({y} > 0 && {x} > ({max_n} - {y})) || "
                f"({y} < 0 && {x} < ({min_n} - {y})))")
    if pattern.shape is Shape.GENERIC_MUL:
        x, y = left_text, right_text
        return (f"(({x} > 0 && {y} > 0 && {x} > ({max_n} / {y})) || "
                f"({x} > 0 && {y} <= 0 && {y} < ({min_n} / {x})) || "
                f"({x} <= 0 && {y} > 0 && {x} < ({min_n} / {y})) || "
                f"({x} <= 0 && {y} <= 0 && {x} != 0 && {y} < ({max_n} / {x})))")
    raise AssertionError(pattern.shape)


def guard_formula_from_text(text: str, operand_env: dict[str, Formula],
                            profile: BoundsProfile) -> Formula:
    """Parse a rendered guard condition back into a formula.

    Identifiers resolve through ``operand_env`` (operand name -> SSA formula)
    or the limit-constant table; sqrt folds to exact integer thresholds.  This
    guarantees the validated formula and the inserted text agree.
    """
    from .frontend.parser import _Parser

    parser = _Parser("<guard>", text)
    expr = parser.expression()
    if parser.cur.kind != "eof":
        raise ValueError(f"trailing tokens in guard text: {text!r}")

    def build(node: AstNode) -> Formula:
        k = node.kind
        if k is NodeKind.INT_LITERAL:
            return const(node.value)
        if k is NodeKind.IDENT:
            if node.name in operand_env:
                return operand_env[node.name]
            hit = profile.named_constant(node.name)
            if hit is not None:
                return const(hit[0])
            raise ValueError(f"unbound identifier in guard: {node.name}")
        if k is NodeKind.UNARY:
            if node.op == "-":
                return neg(as_int(build(node.operand)))
            return not_(as_bool(build(node.operand)))
        if k is NodeKind.CALL and node.name == "sqrt":
            return sqrt(as_int(build(node.args[0])))
        if k is NodeKind.BINARY:
            left, right = build(node.lhs), build(node.rhs)
            op = node.op
            if op == "&&":
                return and_(as_bool(left), as_bool(right))
            if op == "||":
                from .constraints import or_
                return or_(as_bool(left), as_bool(right))
            from .constraints import add, div, mod, mul, sub
            table = {"+": add, "-": sub, "*": mul, "/": div, "%": mod,
                     "<": lt, "<=": le, ">": gt, ">=": ge, "==": eq, "!=": ne}
            return table[op](as_int(left), as_int(right))
        raise ValueError(f"unsupported guard node {k}")

    return normalize(as_bool(build(expr)))


# ---------------------------------------------------------------------------
# Candidates


HANDLER_DECL = ("extern void log_or_die(const char *file, "
                "const char *fault_id, int line);")


def _sha256(text: str) -> str:
    import hashlib

    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class RepairCandidate:
    report: FaultReport
    pattern_id: str
    rank: int
    criteria_matched: list[str]
    guard_text: str
    guard_formula: Formula
    rendered_text: str
    insertion_span: tuple[int, int]
    handler_style: str
    added_lines: int
    valid: bool | None = None
    valid_details: str = ""
    correct: bool | None = None
    hoisted_temp: str | None = None
    else_stmt_text: str = ""
    base_checksum: str = ""   # hash of the file the candidate was rendered from

    def to_json(self, unit: SourceUnit | None = None) -> dict:
        start_line = end_line = None
        if unit is not None:
            start_line = unit.line_of(self.insertion_span)
            end_line = unit.pos_to_linecol(max(self.insertion_span[1] - 1,
                                               self.insertion_span[0]))[0]
        doc = {
            "problemId": self.report.problem_id,
            "patternId": self.pattern_id,
            "rank": self.rank,
            "criteriaMatched": list(self.criteria_matched),
            "renderedText": self.rendered_text,
            "insertionSpan": {"startLine": start_line, "endLine": end_line},
            "valid": self.valid,
        }
        if self.correct is not None:
            doc["correct"] = self.correct
        return doc


def _indent_of(unit: SourceUnit, span: tuple[int, int]) -> str:
    line_start = unit.line_offsets[unit.line_of(span) - 1]
    prefix = unit.text[line_start:span[0]]
    return prefix if prefix.strip() == "" else ""


def render_repair(pattern: RepairPattern, report: FaultReport, bounds: IntBounds,
                  unit: SourceUnit, config: AnalysisConfig,
                  criteria_matched: list[str], rank: int) -> RepairCandidate:
    """Step 8: fill the guard skeleton with the statement's own pieces."""
    shape = report.shape
    indent = _indent_of(unit, report.span)
    original = unit.snippet(report.span)

    left_text, right_text = shape.left.text, shape.right.text
    hoist_lines: list[str] = []
    hoisted_temp = None
    operand_env: dict[str, Formula] = {}
    # A declaration cannot move into the guard block without losing scope;
    # hoist it with a neutral initializer and guard the assignment form.
    if report.stmt_node.kind is NodeKind.VAR_DECL:
        rhs_text = unit.snippet(report.rhs_node.span)
        hoist_lines.append(f"{report.stmt_node.declared_type} "
                           f"{report.stmt_node.name} = 0;")
        else_stmt = f"{report.stmt_node.name} = {rhs_text};"
    else:
        else_stmt = original

    for side, suffix in ((shape.left, ""), (shape.right, "b")):
        if side.kind == OPERAND_SIDE_EFFECT:
            # evaluating an effectful operand twice would change behavior (and
            # the guard condition may not contain calls); hoist each one into
            # a temporary evaluated exactly once, in operand order
            temp = f"ofx_tmp_{report.line}{suffix}"
            hoisted_temp = temp
            temp_type = side.node.ctype
            hoist_lines.append(f"{temp_type} {temp} = {side.text};")
            else_stmt = else_stmt.replace(side.text, temp, 1)
            if side is shape.left:
                left_text = temp
            else:
                right_text = temp
            if side.formula is not None:
                operand_env[temp] = side.formula

    for side, text in ((shape.left, left_text), (shape.right, right_text)):
        if side.kind == OPERAND_VARIABLE and side.formula is not None:
            operand_env[side.text] = side.formula

    cond = guard_text(pattern, report, bounds, config, left_text, right_text)
    file_name = os.path.basename(report.file)
    handler_call = f'log_or_die("{file_name}", "{report.checker_id}", {report.line});'
    if config.handler_die:
        handler_call += " abort();"
    handler_style = "logOrDie" if config.handler_die else "logOnly"

    lines = list(hoist_lines)
    lines += [
        f"if ({cond}) {{",
        f"    {HANDLER_DECL}",
        f"    {handler_call}",
        "} else {",
        f"    {else_stmt}",
        "}",
    ]
    rendered = ("\n" + indent).join(lines)
    added = len(lines) - (original.count("\n") + 1)

    formula = guard_formula_from_text(cond, operand_env, config.resolved_profile())
    return RepairCandidate(
        report=report,
        pattern_id=pattern.id,
        rank=rank,
        criteria_matched=criteria_matched,
        guard_text=cond,
        guard_formula=formula,
        rendered_text=rendered,
        insertion_span=report.span,
        handler_style=handler_style,
        added_lines=added,
        hoisted_temp=hoisted_temp,
        else_stmt_text=else_stmt,
        base_checksum=_sha256(unit.text),
    )


def validate_new_system(capture: Capture, guard_formula: Formula,
                        solver) -> tuple[bool, str]:
    """Step 7: the repair is valid when no violation survives under the guard
    being false (the original statement's branch) and some input still reaches
    that branch."""
    base = SmtScript()
    for v in capture.detection_script.decls:
        base.declare(v)
    for a in capture.detection_script.asserts_tagged(TAG_PATH):
        base.asserts.append(a)
    for a in _defining_asserts(capture):
        base.asserts.append(a)
    base.add(normalize(not_(guard_formula)), TAG_REPAIR)

    with_violation = base.copy()
    with_violation.add(_violation_formula(capture), TAG_CHECKER)
    surviving = solver.solve(with_violation)
    if surviving.is_sat:
        witness = surviving.model or {}
        return False, f"violation survives the guard (witness {witness})"
    if surviving.verdict is Verdict.UNKNOWN:
        return False, "solver could not decide the guarded system"

    reachable = solver.solve(base)
    if not reachable.is_sat:
        return False, "guard blocks every standard input"
    return True, "violation unreachable under guard; standard inputs preserved"


def generate_candidates(unit: SourceUnit, report: FaultReport,
                        config: AnalysisConfig) -> list[RepairCandidate]:
    """Full repair generation for one report (steps 1-8 plus validation)."""
    profile = config.resolved_profile()
    solver = config.make_solver()
    bounds = determine_bounds(report, profile)
    capture = capture_system(report)
    interval = reconstrain_and_check(capture, bounds, solver, profile)
    if isinstance(interval, StillOverflows):
        return []
    if classify_fault(capture) is None:
        return []
    ranked = select_pattern(capture, profile)
    candidates: list[RepairCandidate] = []
    for rank, (pattern, matched) in enumerate(ranked, start=1):
        candidate = render_repair(pattern, report, bounds, unit, config, matched, rank)
        ok, details = validate_new_system(capture, candidate.guard_formula, solver)
        candidate.valid = ok
        candidate.valid_details = details
        candidates.append(candidate)
    return candidates


# ---------------------------------------------------------------------------
# Correctness confirmation (re-analysis + script diff)


@dataclass
class ScriptDiff:
    matched: bool
    inserted_asserts: int
    detail: str = ""


@dataclass
class ConfirmOutcome:
    verdict: str                    # correct | faultPersists | newFaultIntroduced
    post_reports: list[FaultReport]
    script_diff: ScriptDiff | None
    detail: str = ""


VERDICT_CORRECT = "correct"
VERDICT_PERSISTS = "faultPersists"
VERDICT_NEW_FAULT = "newFaultIntroduced"


def _block_line_range(report: FaultReport, candidate: RepairCandidate) -> tuple[int, int]:
    start = report.line
    n_lines = candidate.rendered_text.count("\n") + 1
    return start, start + n_lines - 1


def script_diff_for_repair(report: FaultReport, post_paths,
                           block_span: tuple[int, int],
                           else_span: tuple[int, int] | None) -> ScriptDiff:
    """Compare the stored detection-time path against re-analysis paths.

    The else branch carries the original statement, so its asserts belong to
    the comparable program prefix; everything else the block contributes is
    guard-derived.  A post path matches when the program asserts up to the
    detection point, alpha-renamed, reproduce the stored prefix exactly and
    the guard-derived asserts seen by then stay within the bound.
    """
    pre_texts = alpha_renamed_texts(report.path_decls, report.path_asserts)

    def is_guard_derived(origin: tuple[int, int] | None) -> bool:
        if origin is None:
            return False
        lo, hi = block_span
        if not (origin[0] >= lo and origin[1] <= hi):
            return False
        if else_span is not None and origin[0] >= else_span[0] \
                and origin[1] <= else_span[1]:
            return False  # the original statement, relocated
        return True

    best: ScriptDiff | None = None
    for record in post_paths:
        prefix: list = []
        inserted = 0
        for a in record.asserts:
            if is_guard_derived(a.origin):
                inserted += 1
                continue
            if len(prefix) < len(pre_texts):
                prefix.append(a)
            else:
                break  # past the detection point
        post_texts = alpha_renamed_texts(record.decls, prefix)
        if post_texts == pre_texts:
            diff = ScriptDiff(True, inserted,
                              f"prefix reproduced; {inserted} guard-derived asserts")
            if best is None or inserted < best.inserted_asserts:
                best = diff
    if best is not None:
        return best
    return ScriptDiff(False, -1, "no re-analysis path reproduces the stored prefix")


def confirm_correct_repair(repaired_path: str, repaired_text: str,
                           report: FaultReport, candidate: RepairCandidate,
                           config: AnalysisConfig,
                           pre_report_lines: set[int] | None = None) -> ConfirmOutcome:
    """Re-run the analysis on the rewritten unit and classify the outcome."""
    from .symex import Analyzer

    unit = resolve_types(parse(repaired_path, repaired_text))
    new_span = _find_inserted_span(repaired_text, candidate)
    analyzer = Analyzer(unit, config, collect_paths=True, path_filter=new_span)
    result = analyzer.run()

    block_lo, block_hi = _block_line_range(report, candidate)
    shift = candidate.added_lines
    expected_lines = set()
    for line in (pre_report_lines or set()):
        if line == report.line:
            continue
        expected_lines.add(line + shift if line > report.line else line)

    else_text = (candidate.else_stmt_text or report.statement_text).strip()
    persists = [r for r in result.reports
                if block_lo <= r.line <= block_hi
                and r.statement_text.strip() == else_text]
    new_faults = [r for r in result.reports
                  if r.line not in expected_lines and r not in persists]

    diff = None
    if new_span is not None:
        else_span = None
        if candidate.else_stmt_text:
            marker = candidate.rendered_text.find("} else {")
            rel = candidate.rendered_text.find(candidate.else_stmt_text,
                                               marker if marker >= 0 else 0)
            if rel >= 0:
                else_span = (new_span[0] + rel,
                             new_span[0] + rel + len(candidate.else_stmt_text))
        diff = script_diff_for_repair(report, result.paths, new_span, else_span)

    if persists:
        return ConfirmOutcome(VERDICT_PERSISTS, result.reports, diff,
                              f"{len(persists)} report(s) inside the repaired block")
    if new_faults:
        return ConfirmOutcome(VERDICT_NEW_FAULT, result.reports, diff,
                              f"{len(new_faults)} report(s) at new locations")
    if diff is not None and (not diff.matched or diff.inserted_asserts > 3):
        return ConfirmOutcome(VERDICT_NEW_FAULT, result.reports, diff,
                              f"constraint-system diff out of bounds: {diff.detail}")
    return ConfirmOutcome(VERDICT_CORRECT, result.reports, diff, "fault removed")


def _find_inserted_span(repaired_text: str, candidate: RepairCandidate) -> tuple[int, int] | None:
    pos = repaired_text.find(candidate.rendered_text)
    if pos < 0:
        return None
    return (pos, pos + len(candidate.rendered_text))
