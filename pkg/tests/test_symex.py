import os

import pytest

from overfix.bounds import CType
from overfix.checker import OverflowChecker
from overfix.config import AnalysisConfig
from overfix.constraints import emit
from overfix.frontend import parse, resolve_types
from overfix.stubs import UnknownExtern
from overfix.symex import Analyzer

from conftest import analyze, typed_unit


def _path_script_text(src: str, **cfg) -> str:
    unit = typed_unit(src)
    analyzer = Analyzer(unit, AnalysisConfig(**cfg), collect_paths=True)
    analyzer.run()
    assert analyzer.paths
    from overfix.constraints import SmtScript
    record = analyzer.paths[0]
    script = SmtScript()
    for v in record.decls:
        script.declare(v)
    script.asserts = list(record.asserts)
    return emit(script)


def test_assignment_binds_fresh_ssa_with_equality():
    text = _path_script_text("int main(){ int a; a = 5; return a; }")
    assert "(assert (= a_2 5))" in text  # a_1 is the uninitialized declaration


def test_rand_source_then_square_notifies_checker():
    res = analyze("""
int main(void)
{
    int data = 0;
    int result = 0;
    data = rand();
    result = data * data;
    return result;
}
""")
    assert len(res.reports) == 1
    report = res.reports[0]
    assert report.target_var.base == "result"
    assert report.shape.shape.value == "MulEqual"


def test_memset_is_a_noop_on_the_integer_env():
    res = analyze("""
int main(void)
{
    int n = 8;
    int *p = malloc(n);
    memset(p, 0, n);
    free(p);
    return n;
}
""")
    assert res.reports == []
    assert res.stats.paths_complete == 1


def test_branch_on_concrete_value_prunes_infeasible_side():
    res = analyze("int main(){ int x = 1; if (x > 0) { x = 2; } return x; }")
    assert res.stats.paths_complete == 1
    assert res.stats.paths_infeasible == 1


def test_branch_on_unconstrained_input_explores_both():
    res = analyze("""
int main(void)
{
    int x = 0;
    x = rand();
    if (x > 0) { x = 1; } else { x = 2; }
    return x;
}
""")
    assert res.stats.paths_complete == 2
    assert res.stats.paths_infeasible == 0


def test_guarded_square_reports_no_fault_on_guarded_path():
    res = analyze("""
int main(void)
{
    int data = 0;
    int result = 0;
    data = rand();
    if (data <= 11) {
        result = data * data;
    }
    return result;
}
""")
    # the analog bound is 127 and 11*11 = 121 stays inside it; the guard also
    # keeps the full-scale square inside INT_MAX
    assert res.reports == []


def test_abort_terminates_path():
    res = analyze("""
int main(void)
{
    int x = 0;
    x = rand();
    if (x > 100) {
        abort();
    }
    x = x + 1;
    return x;
}
""")
    # the abort side completes early; the fall-through side continues
    assert res.stats.paths_complete == 2


def test_fscanf_havocs_target_with_type_bounds():
    text = _path_script_text(
        'int main(){ short s = 0; fscanf(stdin, "%hd", &s); return s; }')
    assert "s_2" in text
    assert "(<= s_2 127)" in text  # analog short bound


def test_unknown_extern_rejected():
    with pytest.raises(UnknownExtern):
        analyze("int main(){ int x = frobnicate(); return x; }")


def test_extern_declared_function_returns_fresh_value():
    res = analyze("""
extern int mystery(int a);
int main(void)
{
    int x = 0;
    x = mystery(3);
    if (x > 5) { x = 1; }
    return x;
}
""")
    assert res.stats.paths_complete == 2  # fresh return explores both sides


def test_call_chain_interprets_callee():
    res = analyze("""
int twice(int v)
{
    int r = 0;
    r = v + v;
    return r;
}
int main(void)
{
    int data = 0;
    int out = 0;
    data = rand();
    out = twice(data);
    return out;
}
""")
    assert len(res.reports) == 1
    assert res.reports[0].function == "twice"


def test_recursion_truncated_at_call_depth():
    res = analyze("""
int spiral(int n)
{
    int r = 0;
    if (n > 0) {
        r = spiral(n - 1);
    }
    return r;
}
int main(void)
{
    int x = 0;
    x = rand();
    int out = spiral(x);
    return out;
}
""", config=AnalysisConfig(call_depth=4))
    assert res.stats.paths_complete > 0  # terminates


def test_checker_isolation_noop_checkers_do_not_change_reports():
    class NoopChecker:
        checker_id = "ID-Noop"

        def notify(self, analyzer, state, stmt, rhs, rhs_formula):
            return []

    src = """
int main(void)
{
    int data = 0;
    int result = 0;
    data = rand();
    result = data + 1;
    return result;
}
"""
    unit1 = typed_unit(src)
    base = Analyzer(unit1, AnalysisConfig(), checkers=[OverflowChecker()]).run()
    unit2 = typed_unit(src)
    both = Analyzer(unit2, AnalysisConfig(),
                    checkers=[NoopChecker(), OverflowChecker(), NoopChecker()]).run()
    assert [r.problem_id for r in base.reports] == [r.problem_id for r in both.reports]
    assert [r.line for r in base.reports] == [r.line for r in both.reports]


def test_first_n_per_path_limits_hits():
    src = """
int main(void)
{
    int a = 0;
    int r1 = 0;
    int r2 = 0;
    int r3 = 0;
    a = rand();
    r1 = a + 1;
    r2 = a + 2;
    r3 = a + 3;
    return r1;
}
"""
    full = analyze(src)
    limited = analyze(src, config=AnalysisConfig(first_n_per_path=1))
    assert len(full.reports) == 3
    assert len(limited.reports) == 1


def test_max_faults_stops_the_run():
    src = """
int main(void)
{
    int a = 0;
    int r1 = 0;
    int r2 = 0;
    a = rand();
    r1 = a + 1;
    r2 = a + 2;
    return r1;
}
"""
    limited = analyze(src, config=AnalysisConfig(max_faults=1))
    assert len(limited.reports) == 1


def test_feasible_paths_have_internal_witness(corpus_dir):
    """Every completed path admits a satisfying assignment over the scaled
    domain (checked on a few corpus programs)."""
    from overfix.constraints import SmtScript
    from overfix.solvers import InternalSolver

    solver = InternalSolver()
    names = sorted(n for n in os.listdir(corpus_dir) if n.endswith(".c"))[:3]
    for name in names:
        path = os.path.join(corpus_dir, name)
        unit = resolve_types(parse(path, open(path).read()))
        analyzer = Analyzer(unit, AnalysisConfig(), collect_paths=True)
        analyzer.run()
        assert analyzer.paths
        for record in analyzer.paths:
            script = SmtScript()
            for v in record.decls:
                script.declare(v)
            script.asserts = list(record.asserts)
            assert solver.solve(script).is_sat, (name, record.decisions)


def test_named_limit_constants_fold_per_profile():
    # the analog profile folds INT_MAX to 127, so the guarded site is silent
    res = analyze("""
int main(void)
{
    int data = 0;
    int result = 0;
    data = rand();
    if (data > INT_MAX - 9) {
        return 0;
    }
    result = data + 9;
    return result;
}
""")
    assert res.reports == []
