import itertools
import os

import pytest

from overfix.bounds import ANALOG_8BIT, CType, FULL_SCALE, analog_profile
from overfix.checker import (
    CHECKER_ID_OVERFLOW,
    CHECKER_ID_UNDERFLOW,
    Shape,
    classify_shape,
    effective_result_type,
    select_bounds,
    shape_can_underflow,
)
from overfix.config import AnalysisConfig
from overfix.frontend import parse, resolve_types

from conftest import analyze, typed_unit


def _rhs_of(src: str, stmt_index: int = -2):
    unit = typed_unit(src)
    stmt = unit.functions["main"].body.children[stmt_index]
    return unit, stmt.assigned_expr if stmt.kind.value == "Assign" else stmt.init


# -- shape classification -------------------------------------------------------


@pytest.mark.parametrize("expr,expected", [
    ("data + 7", Shape.ADD_CONST),
    ("7 + data", Shape.ADD_CONST),
    ("data + -7", Shape.GENERIC_ADD),
    ("data + other", Shape.GENERIC_ADD),
    ("data * -3", Shape.MUL_NEG_CONST),
    ("-3 * data", Shape.MUL_NEG_CONST),
    ("data * data", Shape.MUL_EQUAL),
    ("data * other", Shape.GENERIC_MUL),
    ("data * 3", Shape.GENERIC_MUL),
])
def test_shape_classification(expr, expected):
    src = f"""
int main(void)
{{
    int data = 0;
    int other = 0;
    int r = 0;
    data = rand();
    other = rand();
    r = {expr};
    return r;
}}
"""
    unit, rhs = _rhs_of(src)
    shape = classify_shape(rhs, unit.snippet, ANALOG_8BIT)
    assert shape.shape is expected


def test_unsigned_negative_multiplier_falls_to_generic():
    src = """
int main(void)
{
    unsigned int data = 0;
    unsigned int r = 0;
    fscanf(stdin, "%u", &data);
    r = data * -3;
    return 0;
}
"""
    unit, rhs = _rhs_of(src)
    shape = classify_shape(rhs, unit.snippet, ANALOG_8BIT)
    assert shape.shape is Shape.GENERIC_MUL


def test_underflow_capable_shapes():
    assert shape_can_underflow(Shape.MUL_NEG_CONST)
    assert shape_can_underflow(Shape.GENERIC_ADD)
    assert shape_can_underflow(Shape.GENERIC_MUL)
    assert not shape_can_underflow(Shape.ADD_CONST)
    assert not shape_can_underflow(Shape.MUL_EQUAL)


# -- bound selection ------------------------------------------------------------


def test_effective_type_is_the_narrower_side():
    assert effective_result_type(CType.SHORT, CType.INT) is CType.SHORT
    assert effective_result_type(CType.INT64, CType.INT) is CType.INT
    assert effective_result_type(CType.INT, CType.INT) is CType.INT


def test_named_constant_wins_bound_selection():
    b = select_bounds(("LLONG_MAX",), CType.INT, FULL_SCALE)
    assert b.type_name is CType.INT64 and b.max_val == 9223372036854775807


def test_result_type_bound_when_no_constant_seen():
    b = select_bounds((), CType.INT, FULL_SCALE)
    assert b.max_val == 2147483647 and b.min_val == -2147483648


def test_matching_constant_preferred_over_first_seen():
    b = select_bounds(("LLONG_MAX", "SHRT_MAX"), CType.SHORT, FULL_SCALE)
    assert b.type_name is CType.SHORT


def test_literal_min_convention_flag():
    profile = FULL_SCALE.with_literal_min()
    b = profile.bounds(CType.INT)
    assert b.min_val == -2147483646  # -(MAX) + 1
    assert FULL_SCALE.bounds(CType.INT).min_val == -2147483648
    assert profile.bounds(CType.UINT).min_val == 0


# -- end-to-end detection examples ----------------------------------------------


def test_add_const_fault_with_witness():
    res = analyze("""
int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    r = data + 1;
    return r;
}
""")
    assert len(res.reports) == 1
    report = res.reports[0]
    assert report.shape.shape is Shape.ADD_CONST
    assert report.checker_id == CHECKER_ID_OVERFLOW
    witness = report.witness
    assert witness is not None
    target = report.target_var.name
    assert witness[target] > report.bounds.max_val


def test_guarded_range_no_fault():
    res = analyze("""
int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    if (data <= 11 && data >= 0) {
        r = data * data;
    }
    return r;
}
""")
    assert res.reports == []


def test_int64_square_reports_mul_equal():
    res = analyze("""
int main(void)
{
    int64_t data = 0;
    int64_t r = 0;
    fscanf(stdin, "%lld", &data);
    r = data * data;
    return 0;
}
""")
    kinds = [(r.shape.shape, r.bounds.type_name, r.kind) for r in res.reports]
    assert (Shape.MUL_EQUAL, CType.INT64, "overflow") in kinds


def test_neg_const_multiplier_reports_both_kinds():
    res = analyze("""
int main(void)
{
    int data = 0;
    int r = 0;
    fscanf(stdin, "%d", &data);
    r = data * -3;
    return 0;
}
""")
    kinds = {r.kind for r in res.reports}
    assert kinds == {"overflow", "underflow"}
    ids = {r.checker_id for r in res.reports}
    assert ids == {CHECKER_ID_OVERFLOW, CHECKER_ID_UNDERFLOW}
    lines = {r.line for r in res.reports}
    assert len(lines) == 1  # one location, two bound kinds


def test_one_report_per_statement_and_kind_across_paths():
    res = analyze("""
int main(void)
{
    int data = 0;
    int flag = 0;
    int r = 0;
    data = rand();
    flag = rand();
    if (flag > 50) { flag = 1; } else { flag = 0; }
    r = data + 1;
    return r;
}
""")
    # both paths reach the faulty statement; only one report exists
    assert res.stats.paths_complete == 2
    assert len(res.reports) == 1


def test_report_lines_match_annotations_on_corpus(corpus_dir):
    from overfix.harness import scan_annotations
    from overfix.symex import Analyzer

    names = sorted(n for n in os.listdir(corpus_dir) if n.endswith(".c"))[:8]
    for name in names:
        path = os.path.join(corpus_dir, name)
        text = open(path).read()
        expected = scan_annotations(path, text)
        unit = resolve_types(parse(path, text))
        res = Analyzer(unit, AnalysisConfig()).run()
        lines = {r.line for r in res.reports}
        assert lines == {e.line for e in expected}, name
        annotation_lines = [i + 1 for i, ln in enumerate(text.splitlines())
                            if "/* FAULT */" in ln]
        assert lines == {ln + 1 for ln in annotation_lines}


# -- oracle equivalence over the analog domain -----------------------------------


def _detects(src: str, profile=None) -> bool:
    res = analyze(src)
    return bool(res.reports)


def test_multi_precision_flips_with_bounds():
    """The same statement checked under short vs int bounds flips exactly when
    the scaled oracle says the result leaves the corresponding range."""
    short_analog = analog_profile(6)   # short stand-in: max 31
    int_analog = analog_profile(8)     # int stand-in: max 127

    # guard keeps data in [0, 9]: squares reach 81 which overflows the 6-bit
    # analog (31) but not the 8-bit one (127)
    src = """
int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    if (data >= 0 && data <= 9) {
        r = data * data;
    }
    return r;
}
"""
    oracle_hits_small = any(d * d > 31 for d in range(0, 10))
    oracle_hits_big = any(d * d > 127 for d in range(0, 10))
    assert oracle_hits_small and not oracle_hits_big

    res_small = analyze(src, config=AnalysisConfig(profile=short_analog))
    res_big = analyze(src, config=AnalysisConfig(profile=int_analog))
    assert bool(res_small.reports) == oracle_hits_small
    assert bool(res_big.reports) == oracle_hits_big


def test_detection_matches_exhaustive_oracle_per_shape():
    """For each shape, detection fires exactly when some analog input makes
    the mathematical result leave the analog bounds."""
    cases = [
        ("r = data + 9;", lambda d, e: d + 9, "int"),
        ("r = data * -3;", lambda d, e: d * -3, "int"),
        ("r = data * data;", lambda d, e: d * d, "int"),
        ("r = data + extra;", lambda d, e: d + e, "int"),
        ("r = data * extra;", lambda d, e: d * e, "int"),
    ]
    lo, hi = -128, 127
    domain = range(lo, hi + 1)
    for stmt, fn, _ in cases:
        src = f"""
int main(void)
{{
    int data = 0;
    int extra = 0;
    int r = 0;
    fscanf(stdin, "%d", &data);
    fscanf(stdin, "%d", &extra);
    {stmt}
    return 0;
}}
"""
        needs_extra = "extra" in stmt
        if needs_extra:
            oracle = any(not (lo <= fn(d, e) <= hi)
                         for d in domain for e in domain)
        else:
            oracle = any(not (lo <= fn(d, 0) <= hi) for d in domain)
        assert _detects(src) == oracle, stmt
