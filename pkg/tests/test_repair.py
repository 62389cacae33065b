import itertools

import pytest

from overfix.bounds import ANALOG_8BIT, CType, FULL_SCALE
from overfix.checker import Shape
from overfix.config import AnalysisConfig
from overfix.constraints import Formula, emit, evaluate, var
from overfix.frontend import parse, resolve_types
from overfix.repair import (
    Capture,
    SafeInterval,
    StillOverflows,
    VERDICT_CORRECT,
    VERDICT_NEW_FAULT,
    VERDICT_PERSISTS,
    capture_system,
    classify_fault,
    confirm_correct_repair,
    determine_bounds,
    generate_candidates,
    guard_formula_from_text,
    reconstrain_and_check,
    render_repair,
    select_constraint_vars,
    select_pattern,
    validate_new_system,
)
from overfix.rewriter import apply_repair
from overfix.symex import Analyzer

from conftest import analyze, typed_unit


def _first_report(src, config=None, path="t.c"):
    config = config or AnalysisConfig()
    unit = resolve_types(parse(path, src))
    result = Analyzer(unit, config).run()
    assert result.reports, "expected at least one fault"
    return unit, result.reports[0], result, config


SQUARE_SRC = """
int main(void)
{
    int b = 0;
    int a = 0;
    b = rand();
    a = b * b;
    printf("%d", a);
    return 0;
}
"""

ADD_CONST_SRC = """
int main(void)
{
    int s1 = 0;
    int r = 0;
    s1 = rand();
    r = s1 + 7;
    return r;
}
"""

MUL_NEG_SRC = """
int main(void)
{
    int s1 = 0;
    int r = 0;
    fscanf(stdin, "%d", &s1);
    r = s1 * -3;
    return 0;
}
"""


# -- step 1: bounds --------------------------------------------------------------


def test_bounds_from_named_constant_on_path():
    src = """
int main(void)
{
    int64_t data = 0;
    int64_t r = 0;
    fscanf(stdin, "%lld", &data);
    if (data < LLONG_MAX - 9) {
        r = data * data;
    }
    return 0;
}
"""
    unit, report, _, config = _first_report(src)
    bounds = determine_bounds(report, FULL_SCALE)
    assert bounds.type_name is CType.INT64
    assert bounds.max_val == 9223372036854775807


def test_bounds_from_result_type():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    bounds = determine_bounds(report, FULL_SCALE)
    assert bounds.type_name is CType.INT


def test_bounds_agree_when_both_rules_apply():
    src = """
int main(void)
{
    short data = 0;
    short r = 0;
    fscanf(stdin, "%hd", &data);
    if (data < SHRT_MAX) {
        r = data + 9;
    }
    return 0;
}
"""
    unit, report, _, _ = _first_report(src)
    bounds = determine_bounds(report, FULL_SCALE)
    assert bounds.type_name is CType.SHORT and bounds.max_val == 32767


# -- step 2: capture --------------------------------------------------------------


def test_capture_holds_the_five_items():
    src = """
int main(void)
{
    int varA = 0;
    int varB = 0;
    varA = rand();
    varB = rand();
    int result = varA + varB;
    return result;
}
"""
    unit, report, _, _ = _first_report(src)
    capture = capture_system(report)
    assert capture.statement_text == "int result = varA + varB;"
    text = emit(capture.detection_script)
    assert "(+ varA_2 varB_2)" in text          # the defining equality
    assert capture.checker_id == "ID-Integer_Overflow_Fault"
    assert capture.target_var.base == "result"
    dependents = {v.base for v in capture.dependent_vars}
    assert {"varA", "varB"} <= dependents


def test_capture_dependents_for_unconstrained_x():
    src = """
int main(void)
{
    int x;
    int r = 0;
    r = x + 1;
    return r;
}
"""
    # x is uninitialized and unclamped: its variable is the only dependent and
    # carries no defining constraint of its own
    unit, report, _, _ = _first_report(src, config=AnalysisConfig(clamp_inputs=False))
    capture = capture_system(report)
    assert {v.base for v in capture.dependent_vars} == {"x"}
    from overfix.constraints import TAG_PATH
    x_name = capture.dependent_vars[0].name
    path_mentions = [a for a in capture.detection_script.asserts_tagged(TAG_PATH)
                     if x_name in a.variables()]
    assert path_mentions == []


def test_capture_dependents_through_copies():
    src = """
int main(void)
{
    int a = 0;
    int y = 0;
    int r = 0;
    a = rand();
    y = a;
    r = y + y;
    return r;
}
"""
    unit, report, _, _ = _first_report(src)
    capture = capture_system(report)
    bases = {v.base for v in capture.dependent_vars}
    assert {"y", "a", "rand"} <= bases  # closure reaches the source


# -- step 3: constraint variable selection ----------------------------------------


def test_select_vars_target_then_operands():
    src = """
int main(void)
{
    int varA = 0;
    int varB = 0;
    varA = rand();
    varB = rand();
    int result = varA + varB;
    return result;
}
"""
    unit, report, _, _ = _first_report(src)
    ordered = select_constraint_vars(capture_system(report))
    assert ordered[0].base == "result"
    assert [v.base for v in ordered[1:]] == ["varA", "varB"]


def test_select_vars_skips_constants():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    ordered = select_constraint_vars(capture_system(report))
    assert [v.base for v in ordered] == ["r", "s1"]


def test_select_vars_square():
    unit, report, _, _ = _first_report(SQUARE_SRC)
    ordered = select_constraint_vars(capture_system(report))
    assert [v.base for v in ordered] == ["a", "b"]


# -- step 4: re-constrain -----------------------------------------------------------


def test_reconstrain_accepts_full_range_for_add():
    unit, report, _, config = _first_report(ADD_CONST_SRC)
    bounds = determine_bounds(report, config.resolved_profile())
    outcome = reconstrain_and_check(capture_system(report), bounds,
                                    config.make_solver(), config.resolved_profile())
    assert isinstance(outcome, SafeInterval)
    assert (outcome.low, outcome.high) == (bounds.min_val, bounds.max_val)
    assert outcome.subject.base == "r"


def test_reconstrain_square_uses_operand_interval():
    unit, report, _, config = _first_report(SQUARE_SRC)
    bounds = determine_bounds(report, config.resolved_profile())
    outcome = reconstrain_and_check(capture_system(report), bounds,
                                    config.make_solver(), config.resolved_profile())
    assert isinstance(outcome, SafeInterval)
    assert outcome.subject.base == "b"
    from overfix.constraints import floor_sqrt
    fs = floor_sqrt(bounds.max_val)
    assert (outcome.low, outcome.high) == (-fs, fs)
    assert fs * fs <= bounds.max_val < (fs + 1) * (fs + 1)


def test_reconstrain_still_overflows_when_path_forces_violation():
    src = """
int main(void)
{
    int big = 120;
    int r = 0;
    r = big + 9;
    return r;
}
"""
    # the path forces big = 120, so r = 129 always violates the analog bound
    unit, report, _, config = _first_report(src)
    bounds = determine_bounds(report, config.resolved_profile())
    outcome = reconstrain_and_check(capture_system(report), bounds,
                                    config.make_solver(), config.resolved_profile())
    assert isinstance(outcome, StillOverflows)


# -- step 5: fault family -------------------------------------------------------------


def test_classify_known_checker_ids():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    capture = capture_system(report)
    assert classify_fault(capture) == "integer-bound"


def test_classify_foreign_id_no_patterns():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    capture = capture_system(report)
    capture.checker_id = "ID-Race_Condition_Fault"
    assert classify_fault(capture) is None


def test_classify_missing_id_is_an_error():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    capture = capture_system(report)
    capture.checker_id = ""
    with pytest.raises(ValueError):
        classify_fault(capture)


# -- step 6: pattern selection ---------------------------------------------------------


def test_square_ranks_mul_equal_first():
    unit, report, _, config = _first_report(SQUARE_SRC)
    ranked = select_pattern(capture_system(report), config.resolved_profile())
    assert ranked[0][0].id == "mul-equal-guard"
    ids = [p.id for p, _ in ranked]
    assert "generic-mul-guard" in ids


def test_add_const_selected_for_x_plus_7():
    unit, report, _, config = _first_report(ADD_CONST_SRC)
    ranked = select_pattern(capture_system(report), config.resolved_profile())
    assert ranked[0][0].id == "add-const-guard"


def test_selection_is_deterministic():
    unit, report, _, config = _first_report(SQUARE_SRC)
    capture = capture_system(report)
    r1 = [(p.id, tuple(m)) for p, m in select_pattern(capture, config.resolved_profile())]
    r2 = [(p.id, tuple(m)) for p, m in select_pattern(capture, config.resolved_profile())]
    assert r1 == r2


def test_unsupported_operator_yields_no_patterns():
    # a division statement never reaches the checker, so fabricate the facts
    from overfix.repair import PATTERNS, facts_for
    unit, report, _, config = _first_report(ADD_CONST_SRC)
    report.shape.operator = "/"
    ranked = select_pattern(capture_system(report), config.resolved_profile())
    assert ranked == []


# -- step 7: validation ------------------------------------------------------------------


def test_validate_accepts_exact_guard():
    unit, report, _, config = _first_report(SQUARE_SRC)
    cands = generate_candidates(unit, report, config)
    assert cands and cands[0].valid is True


def test_validate_rejects_guard_that_blocks_nothing():
    unit, report, _, config = _first_report(SQUARE_SRC)
    capture = capture_system(report)
    b = report.shape.left.formula
    degenerate = guard_formula_from_text("b != b", {"b": b}, config.resolved_profile())
    ok, details = validate_new_system(capture, degenerate, config.make_solver())
    assert ok is False
    assert "survives" in details


def test_validate_rejects_guard_that_blocks_everything():
    unit, report, _, config = _first_report(SQUARE_SRC)
    capture = capture_system(report)
    b = report.shape.left.formula
    always = guard_formula_from_text("b == b", {"b": b}, config.resolved_profile())
    ok, details = validate_new_system(capture, always, config.make_solver())
    assert ok is False
    assert "blocks every" in details


# -- step 8: rendering --------------------------------------------------------------------


def test_worked_example_guard_shape():
    src = """
int main(void)
{
    int b = 0;
    int a = 0;
    b = rand();
    a = b * b;
    return a;
}
"""
    unit, report, _, config = _first_report(src)
    cands = generate_candidates(unit, report, config)
    top = cands[0]
    assert top.pattern_id == "mul-equal-guard"
    assert top.guard_text == \
        "(b > 0 && b >= sqrt(INT_MAX)) || (b < 0 && b < -sqrt(INT_MAX))"
    lines = top.rendered_text.splitlines()
    assert lines[0].startswith("if ((b > 0 && b >= sqrt(INT_MAX))")
    else_idx = next(i for i, ln in enumerate(lines) if "else" in ln)
    assert "a = b * b;" in lines[else_idx + 1]


def test_add_const_guard_text():
    unit, report, _, config = _first_report(ADD_CONST_SRC)
    top = generate_candidates(unit, report, config)[0]
    assert top.guard_text == "(s1 > 0 && s1 > (INT_MAX - 7))"


def test_mul_neg_const_guard_text():
    unit, report, _, config = _first_report(MUL_NEG_SRC)
    top = generate_candidates(unit, report, config)[0]
    assert top.pattern_id == "mul-neg-const-guard"
    assert top.guard_text == \
        "((s1 > 0 && s1 > (INT_MIN / -3)) || (s1 < 0 && s1 < (INT_MAX / -3)))"


def test_rendered_repair_reparses(corpus_copy):
    import os
    for name in sorted(os.listdir(corpus_copy))[:4]:
        if not name.endswith(".c"):
            continue
        path = os.path.join(corpus_copy, name)
        text = open(path).read()
        config = AnalysisConfig()
        unit = resolve_types(parse(path, text))
        result = Analyzer(unit, config).run()
        for report in result.reports:
            for cand in generate_candidates(unit, report, config):
                applied = apply_repair(path, text, cand, write=False)
                resolve_types(parse(path, applied.new_text))  # must not raise


def test_handler_die_style_appends_abort():
    unit, report, _, _ = _first_report(ADD_CONST_SRC)
    config = AnalysisConfig(handler_die=True)
    top = generate_candidates(unit, report, config)[0]
    assert "abort();" in top.rendered_text
    assert top.handler_style == "logOrDie"


def test_fold_sqrt_emits_integer_thresholds():
    unit, report, _, _ = _first_report(SQUARE_SRC)
    config = AnalysisConfig(fold_sqrt=True)
    top = generate_candidates(unit, report, config)[0]
    assert "sqrt" not in top.guard_text
    assert ">= 12" in top.guard_text and "< -11" in top.guard_text  # analog scale


def test_declaration_fault_hoists_declaration():
    src = """
int main(void)
{
    int data = 0;
    data = rand();
    int result = data * data;
    printf("%d", result);
    return 0;
}
"""
    unit, report, _, config = _first_report(src)
    top = generate_candidates(unit, report, config)[0]
    lines = top.rendered_text.splitlines()
    assert lines[0].strip() == "int result = 0;"
    assert any("result = data * data;" in ln for ln in lines)
    text = open("/dev/null").read() if False else None
    applied = apply_repair("t.c", src, top, write=False)
    resolve_types(parse("t.c", applied.new_text))


def test_side_effect_operand_hoisted_once():
    src = """
int helper(void)
{
    int v = 0;
    v = rand();
    return v;
}
int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    r = data + helper();
    return r;
}
"""
    unit, report, _, config = _first_report(src)
    top = generate_candidates(unit, report, config)[0]
    assert top.hoisted_temp is not None
    rendered = top.rendered_text
    assert rendered.count("helper()") == 1          # evaluated exactly once
    assert f"int {top.hoisted_temp} = helper();" in rendered
    assert f"r = data + {top.hoisted_temp};" in rendered
    applied = apply_repair("t.c", src, top, write=False)
    resolve_types(parse("t.c", applied.new_text))


def test_both_effectful_operands_hoisted():
    src = """
int source_a(void)
{
    int v = 0;
    v = rand();
    return v;
}
int source_b(void)
{
    int w = 0;
    w = rand();
    return w;
}
int main(void)
{
    int r = 0;
    r = source_a() + source_b();
    return r;
}
"""
    unit, report, _, config = _first_report(src)
    top = generate_candidates(unit, report, config)[0]
    assert top.rendered_text.count("source_a()") == 1
    assert top.rendered_text.count("source_b()") == 1
    # the guard condition itself must stay call-free
    guard_line = top.rendered_text.splitlines()[2]
    assert "source_" not in guard_line
    applied = apply_repair("t.c", src, top, write=False)
    resolve_types(parse("t.c", applied.new_text))


def test_template_size_is_constant():
    sizes = set()
    for src in (ADD_CONST_SRC, MUL_NEG_SRC, SQUARE_SRC):
        unit, report, _, config = _first_report(src)
        top = generate_candidates(unit, report, config)[0]
        sizes.add(top.added_lines)
    assert sizes == {5}


def test_candidate_json_schema():
    unit, report, _, config = _first_report(ADD_CONST_SRC)
    top = generate_candidates(unit, report, config)[0]
    doc = top.to_json(unit)
    assert set(doc) >= {"problemId", "patternId", "rank", "criteriaMatched",
                        "renderedText", "insertionSpan", "valid"}
    assert doc["insertionSpan"]["startLine"] == report.line


# -- correctness confirmation ------------------------------------------------------


def test_confirm_correct_after_apply():
    unit, report, result, config = _first_report(SQUARE_SRC)
    top = generate_candidates(unit, report, config)[0]
    applied = apply_repair("t.c", SQUARE_SRC, top, write=False)
    outcome = confirm_correct_repair("t.c", applied.new_text, report, top, config,
                                     {r.line for r in result.reports})
    assert outcome.verdict == VERDICT_CORRECT
    assert outcome.script_diff is not None and outcome.script_diff.matched
    assert 0 <= outcome.script_diff.inserted_asserts <= 3


def test_confirm_fault_persists_with_sabotaged_guard():
    unit, report, result, config = _first_report(ADD_CONST_SRC)
    top = generate_candidates(unit, report, config)[0]
    # sabotage: shift the guard threshold one past the true bound so the
    # boundary value slips through
    sabotaged = top.rendered_text.replace("(INT_MAX - 7)", "(INT_MAX - 7) + 1")
    top.rendered_text = sabotaged
    applied = apply_repair("t.c", ADD_CONST_SRC, top, write=False)
    outcome = confirm_correct_repair("t.c", applied.new_text, report, top, config,
                                     {r.line for r in result.reports})
    assert outcome.verdict == VERDICT_PERSISTS


def test_confirm_new_fault_when_repair_touches_unrelated_code():
    unit, report, result, config = _first_report(ADD_CONST_SRC)
    top = generate_candidates(unit, report, config)[0]
    # fixture: the rewrite also smuggles in an unrelated overflowing statement
    top.rendered_text = top.rendered_text + "\n    r = s1 * s1;"
    applied = apply_repair("t.c", ADD_CONST_SRC, top, write=False)
    outcome = confirm_correct_repair("t.c", applied.new_text, report, top, config,
                                     {r.line for r in result.reports})
    assert outcome.verdict == VERDICT_NEW_FAULT


def test_repair_then_reanalyze_is_a_fixpoint(tmp_path):
    path = tmp_path / "fix.c"
    path.write_text(SQUARE_SRC)
    from overfix.harness import repair_file
    out = repair_file(str(path), AnalysisConfig())
    assert out.repairs_applied == 1
    assert out.verdicts == [VERDICT_CORRECT]
    for _ in range(2):
        res = analyze(path.read_text(), path=str(path))
        assert res.reports == []


# -- guard exactness (scaled domain) -------------------------------------------------


def test_guard_exactness_for_each_pattern():
    """The instantiated guard blocks exactly the operand values whose
    mathematical result leaves the analog bounds."""
    lo, hi = -128, 127
    domain = range(lo, hi + 1)

    single = [
        (ADD_CONST_SRC, lambda s: s + 7),
        (MUL_NEG_SRC, lambda s: s * -3),
        (SQUARE_SRC, lambda s: s * s),
    ]
    for src, fn in single:
        unit, report, _, config = _first_report(src)
        top = generate_candidates(unit, report, config)[0]
        operand = report.shape.variable_operand if top.pattern_id != "mul-equal-guard" \
            else report.shape.left
        name = operand.formula.var_name
        for value in domain:
            blocked = evaluate(top.guard_formula, {name: value})
            violates = not (lo <= fn(value) <= hi)
            assert blocked == violates, (top.pattern_id, value)

    pair_sources = [
        ("""
int main(void)
{
    int x = 0;
    int y = 0;
    int r = 0;
    fscanf(stdin, "%d", &x);
    fscanf(stdin, "%d", &y);
    r = x + y;
    return 0;
}
""", lambda x, y: x + y),
        ("""
int main(void)
{
    int x = 0;
    int y = 0;
    int r = 0;
    fscanf(stdin, "%d", &x);
    fscanf(stdin, "%d", &y);
    r = x * y;
    return 0;
}
""", lambda x, y: x * y),
    ]
    for src, fn in pair_sources:
        unit, report, _, config = _first_report(src)
        top = generate_candidates(unit, report, config)[0]
        xn = report.shape.left.formula.var_name
        yn = report.shape.right.formula.var_name
        from overfix.solvers import _compile_query
        mismatches = 0
        for x, y in itertools.product(domain, domain):
            blocked = evaluate(top.guard_formula, {xn: x, yn: y})
            violates = not (lo <= fn(x, y) <= hi)
            if blocked != violates:
                mismatches += 1
        assert mismatches == 0, top.pattern_id
