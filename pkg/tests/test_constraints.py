import math
import random

import pytest

from overfix.bounds import CType
from overfix.constraints import (
    NegativeInput,
    SmtScript,
    SsaFactory,
    SsaVar,
    TAG_CHECKER,
    TAG_PATH,
    UndeclaredVariable,
    add,
    alpha_renamed_texts,
    and_,
    as_bool,
    c_div,
    c_mod,
    const,
    emit,
    eq,
    evaluate,
    floor_sqrt,
    ge,
    gt,
    le,
    lt,
    mul,
    ne,
    neg,
    normalize,
    or_,
    slice_asserts,
    sliced_script,
    sqrt,
    to_sexpr,
    var,
)


def _ssa(name: str, ctype=CType.INT) -> SsaVar:
    base, _, ver = name.rpartition("_")
    return SsaVar(name, base or name, int(ver) if ver.isdigit() else 0, ctype)


# -- floor_sqrt ---------------------------------------------------------------


def test_floor_sqrt_examples():
    assert floor_sqrt(0) == 0
    assert floor_sqrt(2147483647) == 46340
    assert floor_sqrt(9223372036854775807) == 3037000499


def test_floor_sqrt_definition_property():
    rng = random.Random(4)
    samples = [0, 1, 2, 3, 4, 120, 121, 122, 2**31 - 1, 2**63 - 1]
    samples += [rng.randrange(2**64) for _ in range(500)]
    for n in samples:
        k = floor_sqrt(n)
        assert k * k <= n < (k + 1) * (k + 1)


def test_floor_sqrt_rejects_negative():
    with pytest.raises(NegativeInput):
        floor_sqrt(-1)


# -- C arithmetic semantics ---------------------------------------------------


@pytest.mark.parametrize("a,b", [(7, 2), (-7, 2), (7, -2), (-7, -2), (9, 3), (-9, 3)])
def test_c_division_truncates_toward_zero(a, b):
    assert c_div(a, b) == int(a / b)
    assert c_mod(a, b) == a - b * int(a / b)


# -- emission -----------------------------------------------------------------


def test_emit_addition_binding():
    script = SmtScript()
    for name in ("resSymbolic", "varAsymbolic", "varBsymbolic"):
        script.declare(_ssa(name))
    script.add(eq(var("resSymbolic"), add(var("varAsymbolic"), var("varBsymbolic"))))
    text = emit(script)
    assert "(assert (= resSymbolic (+ varAsymbolic varBsymbolic)))" in text


def test_emit_bound_violation():
    script = SmtScript()
    script.declare(_ssa("resSymbolic"))
    script.add(gt(var("resSymbolic"), const(2147483647)))
    text = emit(script)
    assert "(assert (> resSymbolic 2147483647))" in text


def test_emit_empty_script():
    assert emit(SmtScript()) == "(set-logic QF_NIA)\n(check-sat)\n"


def test_emit_is_canonical():
    def build():
        script = SmtScript()
        script.declare(_ssa("a_1"))
        script.declare(_ssa("b_1"))
        script.add(eq(var("b_1"), add(var("a_1"), const(7))))
        script.add(gt(var("b_1"), const(127)))
        return script

    assert emit(build()) == emit(build())


def test_emit_rejects_undeclared():
    script = SmtScript()
    script.add(gt(var("ghost"), const(0)))
    with pytest.raises(UndeclaredVariable):
        emit(script)


def test_emit_negative_constant():
    script = SmtScript()
    script.declare(_ssa("x_1"))
    script.add(lt(var("x_1"), const(-3)))
    assert "(assert (< x_1 (- 3)))" in emit(script)


def test_emit_c_truncating_division():
    script = SmtScript()
    script.declare(_ssa("x_1"))
    from overfix.constraints import div
    script.add(eq(var("x_1"), div(const(-7), const(2))))
    text = emit(script)
    assert "ite" in text and "div" in text


def test_symbolic_sqrt_emits_floor_definition():
    script = SmtScript()
    script.declare(_ssa("x_1"))
    script.add(ge(sqrt(var("x_1")), const(5)))
    text = emit(script)
    assert "_sqrt_aux_0" in text
    assert "(* _sqrt_aux_0 _sqrt_aux_0)" in text


# -- normalization ------------------------------------------------------------


def test_normalize_folds_constants():
    assert normalize(add(const(2), const(3))) == const(5)
    assert normalize(mul(const(-3), const(4))) == const(-12)
    f = normalize(gt(const(5), const(3)))
    assert evaluate(f, {}) is True


def test_normalize_sqrt_ge_uses_ceiling():
    # x >= sqrt(127): real sqrt is ~11.27, so the exact threshold is 12
    f = normalize(ge(var("x"), sqrt(const(127))))
    assert f == ge(var("x"), const(12))


def test_normalize_sqrt_gt_uses_floor():
    f = normalize(gt(var("x"), sqrt(const(2147483647))))
    assert f == gt(var("x"), const(46340))


def test_normalize_sqrt_negated():
    f = normalize(lt(var("x"), neg(sqrt(const(127)))))
    assert f == lt(var("x"), const(-11))


def test_normalize_sqrt_perfect_square():
    f = normalize(ge(var("x"), sqrt(const(121))))
    assert f == ge(var("x"), const(11))


def test_normalize_sqrt_flipped_sides():
    f = normalize(le(sqrt(const(127)), var("x")))
    assert f == ge(var("x"), const(12))


def test_sqrt_outside_comparison_keeps_floor_meaning():
    f = add(sqrt(const(127)), const(1))
    assert evaluate(f, {}) == 12
    assert to_sexpr(normalize(f)) in ("(+ 11 1)", "12")


# -- evaluation ---------------------------------------------------------------


def test_evaluate_boolean_connectives():
    f = and_(gt(var("a"), const(0)), or_(lt(var("b"), const(5)), ne(var("a"), var("b"))))
    assert evaluate(f, {"a": 1, "b": 9}) is True
    assert evaluate(f, {"a": 0, "b": 0}) is False


def test_as_bool_wraps_int_values():
    f = as_bool(var("x"))
    assert evaluate(f, {"x": 3}) is True
    assert evaluate(f, {"x": 0}) is False


# -- slicing -------------------------------------------------------------------


def _tagged(formula, tag=TAG_PATH):
    from overfix.constraints import TaggedAssert
    return TaggedAssert(formula, tag)


def test_slice_keeps_dependency_closure():
    asserts = [
        _tagged(eq(var("a_1"), const(3))),
        _tagged(eq(var("b_1"), add(var("a_1"), const(1)))),
        _tagged(eq(var("z_1"), const(9))),       # independent
        _tagged(gt(var("b_1"), const(0))),
    ]
    kept, reached = slice_asserts(asserts, {"b_1"})
    assert len(kept) == 3
    assert "z_1" not in reached
    assert {"a_1", "b_1"} <= reached


def test_sliced_script_declares_only_reached():
    script = SmtScript()
    for name in ("a_1", "b_1", "z_1"):
        script.declare(_ssa(name))
    script.add(eq(var("b_1"), add(var("a_1"), const(1))))
    script.add(eq(var("z_1"), const(4)))
    sliced = sliced_script(script, {"b_1"})
    assert [v.name for v in sliced.decls] == ["a_1", "b_1"]


def test_slice_verdict_matches_full_verdict_on_corpus(corpus_dir):
    """Solving the dependency slice gives the same answer as the full path
    script, for checker-style queries over real corpus programs."""
    import os

    from overfix.config import AnalysisConfig
    from overfix.frontend import parse, resolve_types
    from overfix.solvers import InternalSolver
    from overfix.symex import Analyzer

    solver = InternalSolver()
    names = sorted(n for n in os.listdir(corpus_dir) if n.endswith(".c"))[:6]
    checked = 0
    for name in names:
        path = os.path.join(corpus_dir, name)
        unit = resolve_types(parse(path, open(path).read()))
        analyzer = Analyzer(unit, AnalysisConfig(), collect_paths=True)
        result = analyzer.run()
        for report in result.reports:
            full = SmtScript()
            for v in report.path_decls:
                full.declare(v)
            full.declare(report.target_var)
            full.asserts = list(report.path_asserts)
            for a in report.detection_script.asserts_tagged(TAG_CHECKER):
                full.asserts.append(a)
            full_verdict = solver.solve(full).verdict
            slice_verdict = solver.solve(report.detection_script).verdict
            assert full_verdict == slice_verdict, (name, report.problem_id)
            checked += 1
    assert checked >= 6


# -- tags and alpha renaming ---------------------------------------------------


def test_checker_tagged_asserts_can_be_dropped():
    script = SmtScript()
    script.declare(_ssa("a_1"))
    script.add(eq(var("a_1"), const(1)), TAG_PATH)
    script.add(gt(var("a_1"), const(127)), TAG_CHECKER)
    pruned = script.without_tag(TAG_CHECKER)
    assert len(pruned.asserts) == 1
    assert len(script.asserts) == 2  # original untouched


def test_alpha_renaming_aligns_across_version_drift():
    def build(version_base: int):
        script = SmtScript()
        a = SsaVar(f"a_{version_base}", "a", version_base, CType.INT)
        b = SsaVar(f"b_{version_base + 1}", "b", version_base + 1, CType.INT)
        script.declare(a)
        script.declare(b)
        script.add(eq(var(b), add(var(a), const(7))))
        return script

    s1, s2 = build(1), build(5)
    assert alpha_renamed_texts(s1.decls, s1.asserts) == \
        alpha_renamed_texts(s2.decls, s2.asserts)


def test_script_snapshot_truncate():
    script = SmtScript()
    script.declare(_ssa("a_1"))
    snap = script.snapshot()
    script.declare(_ssa("b_1"))
    script.add(eq(var("b_1"), const(2)))
    script.truncate(snap)
    assert [v.name for v in script.decls] == ["a_1"]
    assert script.asserts == []
    assert script.declared("b_1") is None
