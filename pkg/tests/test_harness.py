import os
import time

import pytest

from overfix.config import AnalysisConfig
from overfix.harness import (
    ExpectedFault,
    ManifestError,
    ParamsInfeasible,
    SynthParams,
    corpus_files,
    generate_test_cases,
    repair_file,
    run_report,
    scan_annotations,
    synthesize_program,
)
from overfix.rewriter import count_loc

from conftest import analyze


def test_single_annotation_manifest(tmp_path):
    path = tmp_path / "one.c"
    path.write_text("""
int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    /* FAULT */
    r = data + 1;
    return r;
}
""")
    manifest = scan_annotations(str(path))
    assert len(manifest) == 1
    entry = manifest[0]
    assert entry.line == 8 and entry.function == "main" and entry.file == "one.c"


def test_annotation_without_following_statement_errors(tmp_path):
    path = tmp_path / "bad.c"
    path.write_text("""
int main(void)
{
    return 0;
}
/* FAULT */
""")
    with pytest.raises(ManifestError):
        scan_annotations(str(path))


def test_bundled_corpus_has_thirty_expectations(corpus_dir):
    manifest = generate_test_cases(corpus_dir)
    assert len(manifest) == 30
    assert len({m.file for m in manifest}) == 30  # one per file


# -- run cross-referencing -------------------------------------------------------


def _fake_report(file, line, function="main"):
    return {"file": file, "line": line, "function": function,
            "problemId": f"{file}:{line}:overflow"}


def test_run_report_perfect():
    manifest = [ExpectedFault("a.c", "main", 10), ExpectedFault("b.c", "f", 20)]
    results = {"a.c": [_fake_report("a.c", 10)],
               "b.c": [_fake_report("b.c", 20, function="f")]}
    report = run_report(results, manifest)
    assert report.ok
    assert report.true_positives_found == 2


def test_run_report_misses_everything_when_analyzer_is_silent():
    manifest = [ExpectedFault("a.c", "main", 10), ExpectedFault("b.c", "f", 20)]
    report = run_report({"a.c": [], "b.c": []}, manifest)
    assert not report.ok
    assert len(report.missed) == 2
    assert report.true_positives_found == 0


def test_run_report_flags_spurious_location():
    manifest = [ExpectedFault("a.c", "main", 10)]
    results = {"a.c": [_fake_report("a.c", 10), _fake_report("a.c", 33)]}
    report = run_report(results, manifest)
    assert not report.ok
    assert len(report.spurious) == 1
    assert report.spurious[0]["line"] == 33


def test_run_report_flags_wrong_function():
    manifest = [ExpectedFault("a.c", "expected_fn", 10)]
    results = {"a.c": [_fake_report("a.c", 10, function="other_fn")]}
    report = run_report(results, manifest)
    assert not report.ok and len(report.spurious) == 1


# -- synthesizer -------------------------------------------------------------------


def test_synth_deterministic():
    params = SynthParams(target_loc=800, rng_seed=42)
    assert synthesize_program(1, params) == synthesize_program(1, params)


def test_synth_line_budget():
    for target in (800, 2000, 6000):
        text = synthesize_program(3, SynthParams(target_loc=target, rng_seed=5))
        loc = count_loc(text)
        assert abs(loc - target) <= max(0.05 * target, 40)


def test_synth_has_one_annotation_and_parses():
    text = synthesize_program(2, SynthParams(target_loc=900, rng_seed=9))
    assert text.count("/* FAULT */") == 1
    from overfix.frontend import parse, resolve_types
    resolve_types(parse("synth.c", text))


def test_synth_rejects_bad_params():
    with pytest.raises(ParamsInfeasible):
        synthesize_program(9, SynthParams())
    with pytest.raises(ParamsInfeasible):
        synthesize_program(1, SynthParams(target_loc=50))


def test_minimal_instance_analyzes_quickly(tmp_path):
    params = SynthParams(target_loc=400, call_chain_len=1, loop_iters=0,
                         decoy_count=0, rng_seed=3)
    text = synthesize_program(1, params)
    path = tmp_path / "mini.c"
    path.write_text(text)
    start = time.monotonic()
    res = analyze(text, path=str(path))
    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    expected = scan_annotations(str(path), text)
    assert [r.line for r in res.reports] == [expected[0].line]


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_synth_ground_truth_per_seed(tmp_path, seed):
    """Exactly one fault at the annotated line and none elsewhere."""
    params = SynthParams(target_loc=700, call_chain_len=3, loop_iters=2,
                         decoy_count=2, rng_seed=seed)
    text = synthesize_program(seed, params)
    path = tmp_path / f"seed{seed}.c"
    path.write_text(text)
    expected = scan_annotations(str(path), text)
    res = analyze(text, path=str(path))
    assert {r.line for r in res.reports} == {expected[0].line}
    assert len({(r.line, r.kind) for r in res.reports}) == 1


def test_repair_file_round_trips(tmp_path, corpus_dir):
    src = os.path.join(corpus_dir, "case10_mul_equal_direct_int.c")
    dst = tmp_path / "case10.c"
    dst.write_text(open(src).read())
    outcome = repair_file(str(dst), AnalysisConfig())
    assert outcome.repairs_applied == 1
    assert outcome.verdicts == ["correct"]
    assert outcome.remaining_reports == 0
    assert (tmp_path / "case10.c.orig").exists()


def test_corpus_files_sorted(corpus_dir):
    files = corpus_files(corpus_dir)
    assert files == sorted(files)
    assert all(f.endswith(".c") for f in files)


def test_parallel_corpus_run_matches_sequential(tmp_path, corpus_dir):
    import shutil

    from overfix.harness import corpus_run

    for name in sorted(os.listdir(corpus_dir))[:4]:
        if name.endswith(".c"):
            shutil.copy(os.path.join(corpus_dir, name), tmp_path)
    sequential = corpus_run(str(tmp_path), AnalysisConfig(), jobs=1)
    parallel = corpus_run(str(tmp_path), AnalysisConfig(), jobs=2)
    key = lambda r: (r["file"], r["line"], r["checkerId"])
    assert sorted(map(key, sequential.reports)) == sorted(map(key, parallel.reports))
    assert parallel.ok == sequential.ok
