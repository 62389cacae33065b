"""Acceptance gate: one test per criterion, each printing a PASS line.

Everything here runs with the internal exhaustive backend only; no external
solver or secondary component is required.
"""

import itertools
import os
import shutil
import subprocess
import time

import pytest

from overfix.bounds import ANALOG_8BIT, CType
from overfix.cfg import build_cfg
from overfix.checker import Shape
from overfix.config import AnalysisConfig
from overfix.constraints import Formula, evaluate, vars_of
from overfix.frontend import parse, resolve_types
from overfix.harness import (
    SynthParams,
    corpus_files,
    corpus_run,
    generate_test_cases,
    repair_file,
    scan_annotations,
    synthesize_program,
)
from overfix.repair import generate_candidates, guard_formula_from_text, guard_text
from overfix.rewriter import count_loc
from overfix.solvers import _compile_query
from overfix.symex import Analyzer

ANALOG_LO, ANALOG_HI = -128, 127
SIGNED_DOMAIN = range(ANALOG_LO, ANALOG_HI + 1)
UNSIGNED_DOMAIN = range(0, 256)


def _passed(name: str) -> None:
    print(f"\nACCEPTANCE PASS: {name}")


def _compiled(formula: Formula, names: list[str]):
    query = _compile_query({}, [formula], names)
    return query


# ---------------------------------------------------------------------------
# Shared corpus-repair state (computed once, reused by several criteria)


@pytest.fixture(scope="module")
def repaired_corpus(tmp_path_factory, corpus_dir):
    workdir = tmp_path_factory.mktemp("accept-corpus")
    before = {}
    for path in corpus_files(corpus_dir):
        name = os.path.basename(path)
        shutil.copy(path, workdir)
        before[name] = open(path).read()
    outcomes = []
    config = AnalysisConfig()
    for path in corpus_files(str(workdir)):
        outcomes.append(repair_file(path, config))
    after = {name: open(os.path.join(workdir, name)).read() for name in before}
    return {"dir": str(workdir), "before": before, "after": after,
            "outcomes": outcomes, "config": config}


# ---------------------------------------------------------------------------
# 1. Precondition oracle equivalence


def test_precondition_oracle_equivalence():
    start = time.monotonic()
    profile = ANALOG_8BIT
    mismatches = 0
    checked = 0

    def guard_eval(text, env_names):
        f = guard_formula_from_text(
            text, {n: Formula("var", (n,)) for n in env_names}, profile)
        return _compiled(f, list(env_names))

    # first precondition: variable plus positive constant
    for c in range(1, 128):
        g = guard_eval(f"(s1 > 0 && s1 > (INT_MAX - {c}))", ["s1"])
        for s1 in SIGNED_DOMAIN:
            violates = not (ANALOG_LO <= s1 + c <= ANALOG_HI)
            mismatches += g(s1) != violates
            checked += 1

    # second precondition: variable times negative constant
    for c in range(-128, 0):
        g = guard_eval(
            f"((s1 > 0 && s1 > (INT_MIN / {c})) || (s1 < 0 && s1 < (INT_MAX / {c})))",
            ["s1"])
        for s1 in SIGNED_DOMAIN:
            violates = not (ANALOG_LO <= s1 * c <= ANALOG_HI)
            mismatches += g(s1) != violates
            checked += 1

    # third precondition: two equal variables multiplied
    g = guard_eval("(s1 > 0 && s1 >= sqrt(INT_MAX)) || (s1 < 0 && s1 < -sqrt(INT_MAX))",
                   ["s1"])
    for s1 in SIGNED_DOMAIN:
        violates = not (ANALOG_LO <= s1 * s1 <= ANALOG_HI)
        mismatches += g(s1) != violates
        checked += 1

    # generic two-variable addition
    g = guard_eval("((y > 0 && x > (INT_MAX - y)) || (y < 0 && x < (INT_MIN - y)))",
                   ["x", "y"])
    for x, y in itertools.product(SIGNED_DOMAIN, SIGNED_DOMAIN):
        violates = not (ANALOG_LO <= x + y <= ANALOG_HI)
        mismatches += g(x, y) != violates
        checked += 1

    # generic two-variable multiplication
    g = guard_eval(
        "((x > 0 && y > 0 && x > (INT_MAX / y)) || "
        "(x > 0 && y <= 0 && y < (INT_MIN / x)) || "
        "(x <= 0 && y > 0 && x < (INT_MIN / y)) || "
        "(x <= 0 && y <= 0 && x != 0 && y < (INT_MAX / x)))", ["x", "y"])
    for x, y in itertools.product(SIGNED_DOMAIN, SIGNED_DOMAIN):
        violates = not (ANALOG_LO <= x * y <= ANALOG_HI)
        mismatches += g(x, y) != violates
        checked += 1

    elapsed = time.monotonic() - start
    assert mismatches == 0
    assert checked > 190_000
    assert elapsed < 10.0
    _passed(f"precondition oracle equivalence ({checked} pairs, "
            f"0 mismatches, {elapsed:.1f}s)")


# ---------------------------------------------------------------------------
# 2. Detection completeness on the bundled corpus


def test_detection_completeness_on_corpus(corpus_dir):
    start = time.monotonic()
    report = corpus_run(corpus_dir, AnalysisConfig())
    elapsed = time.monotonic() - start
    manifest = generate_test_cases(corpus_dir)
    assert len(manifest) == 30

    assert report.missed == []
    assert report.spurious == []
    assert report.true_positives_found == 30
    # every report sits on the line after its annotation
    for path in corpus_files(corpus_dir):
        text = open(path).read()
        annotation_lines = [i + 1 for i, ln in enumerate(text.splitlines())
                            if "/* FAULT */" in ln]
        expected = {ln + 1 for ln in annotation_lines}
        got = {r["line"] for r in report.reports
               if r["file"] == os.path.basename(path)}
        assert got == expected, path
    assert elapsed < 60.0
    _passed(f"detection completeness: 30/30 found, 0 missed, 0 spurious "
            f"({elapsed:.1f}s, internal backend)")


# ---------------------------------------------------------------------------
# 3. Repair fixpoint


def test_repair_fixpoint(repaired_corpus):
    outcomes = repaired_corpus["outcomes"]
    assert all(o.remaining_reports == 0 for o in outcomes)
    assert all(v == "correct" for o in outcomes for v in o.verdicts)
    second = corpus_run(repaired_corpus["dir"], repaired_corpus["config"])
    assert len(second.reports) == 0
    third = corpus_run(repaired_corpus["dir"], repaired_corpus["config"])
    assert len(third.reports) == 0
    total = sum(o.repairs_applied for o in outcomes)
    _passed(f"repair fixpoint: {total} repairs applied, re-analysis and "
            f"third analysis both report 0 faults")


# ---------------------------------------------------------------------------
# 4. Guard exactness on the scaled domain


def test_guard_exactness(repaired_corpus):
    checked_guards = 0
    violations = 0
    for outcome in repaired_corpus["outcomes"]:
        for cand, report in zip(outcome.candidates, outcome.reports):
            operand_names = sorted(vars_of(report.rhs_formula))
            guard_vars = vars_of(cand.guard_formula)
            assert guard_vars <= set(operand_names)
            domains = []
            for name in operand_names:
                decl = report.detection_script.declared(name)
                ctype = decl.declared_ctype if decl else CType.INT
                domains.append(UNSIGNED_DOMAIN if ctype is CType.UINT
                               else SIGNED_DOMAIN)
            guard = _compiled(cand.guard_formula, operand_names)
            rhs = _compiled(report.rhs_formula, operand_names)
            lo, hi = report.bounds.min_val, report.bounds.max_val
            for values in itertools.product(*domains):
                blocked = guard(*values)
                result = rhs(*values)
                if blocked != (result < lo or result > hi):
                    violations += 1
            checked_guards += 1
    assert checked_guards >= 30
    assert violations == 0
    _passed(f"guard exactness: {checked_guards} applied guards block exactly "
            f"the violating operand values (0 exceptions)")


# ---------------------------------------------------------------------------
# 5. Constraint-system diff bound


def test_smt_diff_bound(repaired_corpus):
    sizes = []
    for outcome in repaired_corpus["outcomes"]:
        for confirmation in outcome.confirmations:
            diff = confirmation.script_diff
            assert diff is not None and diff.matched, outcome.file
            assert diff.inserted_asserts <= 3, (outcome.file, diff)
            sizes.append(diff.inserted_asserts)
    assert sizes
    _passed(f"constraint-system diff: every repaired path differs only in "
            f"guard-derived asserts (max {max(sizes)} <= 3)")


# ---------------------------------------------------------------------------
# 6. LOC blowup


def test_loc_blowup(repaired_corpus):
    before = sum(count_loc(t) for t in repaired_corpus["before"].values())
    after = sum(count_loc(t) for t in repaired_corpus["after"].values())
    added = after - before
    percent = 100.0 * added / before
    assert percent < 2.0
    for outcome in repaired_corpus["outcomes"]:
        for cand, per_file_added in zip(outcome.candidates, outcome.added_lines):
            assert per_file_added == cand.added_lines == 5
    _passed(f"LOC blowup: +{added} lines over {before} "
            f"({percent:.2f}% < 2%), every repair exactly 5 lines")


# ---------------------------------------------------------------------------
# 7. Syntactic correctness (re-parse, and compile when a compiler is present)


def test_syntactic_correctness(repaired_corpus, tmp_path):
    for name, text in repaired_corpus["after"].items():
        resolve_types(parse(name, text))

    cc = os.environ.get("CC") or shutil.which("cc") or shutil.which("gcc")
    compiled = 0
    if cc:
        for name, text in repaired_corpus["after"].items():
            src = tmp_path / name
            src.write_text(text)
            obj = tmp_path / (name + ".o")
            proc = subprocess.run(
                [cc, "-std=c99", "-c", str(src), "-o", str(obj)],
                capture_output=True, text=True)
            assert proc.returncode == 0, f"{name}: {proc.stderr}"
            compiled += 1
    suffix = f", {compiled} compiled with {os.path.basename(cc)}" if cc else \
        " (no C compiler available)"
    _passed(f"syntactic correctness: all 30 repaired files re-parse{suffix}")


# ---------------------------------------------------------------------------
# 8. Scalability analog (6 KLOC end to end)


def test_scalability_six_kloc(tmp_path):
    start = time.monotonic()
    text = synthesize_program(2, SynthParams(target_loc=6000, rng_seed=7))
    path = tmp_path / "bench6k.c"
    path.write_text(text)
    expected = scan_annotations(str(path), text)

    unit = resolve_types(parse(str(path), text))
    result = Analyzer(unit, AnalysisConfig()).run()
    assert {r.line for r in result.reports} == {expected[0].line}

    outcome = repair_file(str(path), AnalysisConfig())
    assert outcome.repairs_applied == 1
    assert outcome.verdicts == ["correct"]
    assert outcome.remaining_reports == 0
    elapsed = time.monotonic() - start
    assert elapsed < 300.0
    _passed(f"scalability: 6 KLOC program detected, repaired, and re-verified "
            f"in {elapsed:.0f}s (< 5 min)")


# ---------------------------------------------------------------------------
# 9. Worked-example fidelity


def test_worked_example_fidelity():
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
    unit = resolve_types(parse("t.c", src))
    config = AnalysisConfig()
    result = Analyzer(unit, config).run()
    top = generate_candidates(unit, result.reports[0], config)[0]
    assert top.guard_text == \
        "(b > 0 && b >= sqrt(INT_MAX)) || (b < 0 && b < -sqrt(INT_MAX))"
    lines = [ln.strip() for ln in top.rendered_text.splitlines()]
    else_idx = next(i for i, ln in enumerate(lines) if ln == "} else {")
    assert lines[else_idx + 1] == "a = b * b;"
    _passed("worked-example fidelity: square statement yields the exact "
            "sqrt(INT_MAX) guard with the original statement in the else branch")


# ---------------------------------------------------------------------------
# 10. Path enumeration oracle


def test_path_enumeration_oracle():
    import random

    from test_cfg_paths import _random_loop_free_source, brute_force_label_sequences

    rng = random.Random(811)
    config = AnalysisConfig(clamp_inputs=False)
    for i in range(100):
        src = _random_loop_free_source(rng)
        unit = resolve_types(parse(f"rand{i}.c", src))
        cfg = build_cfg(unit.functions["main"])
        expected = brute_force_label_sequences(cfg)
        analyzer = Analyzer(unit, config, collect_paths=True)
        analyzer.run()
        got = {tuple("true" if taken else "false" for _, taken, _ in r.decisions)
               for r in analyzer.paths}
        assert got == expected, src

    # loops never exceed the unroll bound
    loop_src = """
int main(void)
{
    int again = 0;
    again = rand();
    while (again > 50) {
        again = rand();
    }
    return 0;
}
"""
    unit = resolve_types(parse("loop.c", loop_src))
    analyzer = Analyzer(unit, AnalysisConfig(unroll_bound=10), collect_paths=True)
    analyzer.run()
    max_iterations = max(
        sum(1 for _, taken, _ in record.decisions if taken)
        for record in analyzer.paths)
    assert max_iterations <= 10
    assert len(analyzer.paths) == 11
    _passed("path enumeration oracle: 100 random loop-free functions match "
            "brute force; loop iterations never exceed the unroll bound")
