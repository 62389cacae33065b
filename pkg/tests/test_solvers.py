import os
import stat
import textwrap

import pytest

from overfix.bounds import ANALOG_8BIT, CType
from overfix.constraints import (
    SmtScript,
    SsaVar,
    add,
    and_,
    const,
    eq,
    ge,
    gt,
    le,
    lt,
    mul,
    var,
)
from overfix.solvers import (
    ExternalSolver,
    InternalSolver,
    SolverProtocolError,
    SolverTimeout,
    Verdict,
    _parse_model,
)


def _ssa(name: str, ctype=CType.INT) -> SsaVar:
    return SsaVar(name, name.rsplit("_", 1)[0], 1, ctype)


def _script(decls, *asserts) -> SmtScript:
    script = SmtScript()
    for d in decls:
        script.declare(_ssa(d) if isinstance(d, str) else d)
    for a in asserts:
        script.add(a)
    return script


# -- internal backend ---------------------------------------------------------


def test_internal_contradiction_unsat():
    script = _script(["x_1"], gt(var("x_1"), const(5)), lt(var("x_1"), const(3)))
    assert InternalSolver().solve(script).is_unsat


def test_internal_overflow_witness_at_full_scale_constants():
    # every variable is defined by substitution, so no enumeration happens and
    # full-scale constants are exact
    script = _script(
        ["r_1", "a_1", "b_1"],
        eq(var("a_1"), const(2147483647)),
        eq(var("b_1"), const(1)),
        eq(var("r_1"), add(var("a_1"), var("b_1"))),
        gt(var("r_1"), const(2147483647)),
    )
    result = InternalSolver().solve(script)
    assert result.is_sat
    assert result.model["r_1"] == 2147483648  # confirmed against direct addition


def test_internal_square_bound_unsat():
    # 46340 * 46340 = 2147395600 <= INT_MAX, verified by direct multiplication
    assert 46340 * 46340 <= 2147483647 < 46341 * 46341
    script = _script(
        ["r_1", "a_1"],
        ge(var("a_1"), const(0)),
        le(var("a_1"), const(46340)),
        eq(var("r_1"), mul(var("a_1"), var("a_1"))),
        gt(var("r_1"), const(2147483647)),
    )
    assert InternalSolver().solve(script).is_unsat


def test_internal_enumerates_free_inputs_over_analog_domain():
    script = _script(
        ["data_1", "r_1"],
        eq(var("r_1"), mul(var("data_1"), var("data_1"))),
        gt(var("r_1"), const(127)),
    )
    result = InternalSolver().solve(script)
    assert result.is_sat
    witness = result.model["data_1"]
    assert witness * witness > 127
    assert -128 <= witness <= 127


def test_internal_unsigned_domain():
    script = _script(
        [SsaVar("u_1", "u", 1, CType.UINT)],
        lt(var("u_1"), const(0)),
    )
    assert InternalSolver().solve(script).is_unsat


def test_internal_independent_components_solved_separately():
    # coupled exhaustively this would be 256**4 combinations; component
    # decomposition keeps it exact
    names = [f"v{i}_1" for i in range(4)]
    script = _script(
        names,
        *[gt(var(n), const(100)) for n in names],
    )
    result = InternalSolver().solve(script)
    assert result.is_sat
    assert all(result.model[n] > 100 for n in names)


def test_internal_unknown_when_coupled_domain_too_large():
    names = [f"w{i}_1" for i in range(4)]
    coupled = add(var(names[0]), add(var(names[1]),
                                     add(var(names[2]), var(names[3]))))
    script = _script(names, gt(coupled, const(400)))
    result = InternalSolver(max_combinations=1000).solve(script)
    assert result.verdict is Verdict.UNKNOWN
    assert "coupled" in (result.reason or "")


def test_internal_division_by_zero_not_a_witness():
    from overfix.constraints import div
    script = _script(
        ["x_1"],
        eq(var("x_1"), const(0)),
        gt(div(const(10), var("x_1")), const(0)),
    )
    assert InternalSolver().solve(script).is_unsat


# -- external backend protocol -------------------------------------------------


def _fake_solver(tmp_path, body: str) -> str:
    path = tmp_path / "fakesolver"
    path.write_text("#!/bin/sh\n" + textwrap.dedent(body))
    path.chmod(path.stat().st_mode | stat.S_IEXEC)
    return str(path)


def test_external_parses_first_nonblank_token(tmp_path):
    binary = _fake_solver(tmp_path, 'echo ""\necho "sat"\n')
    result = ExternalSolver(binary).solve(_script(["x_1"], gt(var("x_1"), const(0))))
    assert result.is_sat


def test_external_unsat(tmp_path):
    binary = _fake_solver(tmp_path, 'echo "unsat"\n')
    result = ExternalSolver(binary).solve(_script(["x_1"], gt(var("x_1"), const(0))))
    assert result.is_unsat


def test_external_unknown(tmp_path):
    binary = _fake_solver(tmp_path, 'echo "unknown"\n')
    result = ExternalSolver(binary).solve(_script(["x_1"], gt(var("x_1"), const(0))))
    assert result.verdict is Verdict.UNKNOWN


def test_external_protocol_error(tmp_path):
    binary = _fake_solver(tmp_path, 'echo "segfault lol"\n')
    with pytest.raises(SolverProtocolError):
        ExternalSolver(binary).solve(_script(["x_1"], gt(var("x_1"), const(0))))


def test_external_timeout(tmp_path):
    binary = _fake_solver(tmp_path, "sleep 5\necho sat\n")
    with pytest.raises(SolverTimeout):
        ExternalSolver(binary, timeout=0.3).solve(
            _script(["x_1"], gt(var("x_1"), const(0))))


def test_external_receives_script_on_stdin(tmp_path):
    capture = tmp_path / "query.smt2"
    binary = _fake_solver(tmp_path, f'cat > "{capture}"\necho unsat\n')
    ExternalSolver(binary).solve(_script(["x_1"], gt(var("x_1"), const(0))))
    text = capture.read_text()
    assert text.startswith("(set-logic QF_NIA)")
    assert "(assert (> x_1 0))" in text and "(check-sat)" in text


def test_external_file_argument_mode(tmp_path):
    capture = tmp_path / "query.smt2"
    binary = _fake_solver(tmp_path, f'cat "$1" > "{capture}"\necho unsat\n')
    ExternalSolver(binary, use_stdin=False).solve(
        _script(["x_1"], gt(var("x_1"), const(0))))
    assert "(check-sat)" in capture.read_text()


def test_external_model_parsing():
    raw = """sat
(model
  (define-fun x_1 () Int 12)
  (define-fun y_1 () Int (- 5))
)
"""
    assert _parse_model(raw) == {"x_1": 12, "y_1": -5}


def test_external_solver_requires_command(monkeypatch):
    monkeypatch.delenv("OVERFIX_SOLVER", raising=False)
    with pytest.raises(ValueError):
        ExternalSolver(None)


# -- backend agreement (needs a real solver) -----------------------------------


@pytest.mark.skipif(not os.environ.get("OVERFIX_SOLVER"),
                    reason="no external solver configured")
def test_backend_agreement_on_random_scaled_scripts():
    import random

    rng = random.Random(99)
    internal = InternalSolver()
    external = ExternalSolver()
    for _ in range(25):
        a, b = _ssa("a_1"), _ssa("b_1")
        script = SmtScript()
        script.declare(a)
        script.declare(b)
        script.add(and_(ge(var("a_1"), const(-128)), le(var("a_1"), const(127))))
        script.add(and_(ge(var("b_1"), const(-128)), le(var("b_1"), const(127))))
        lhs = add(var("a_1"), var("b_1")) if rng.random() < 0.5 \
            else mul(var("a_1"), var("b_1"))
        script.add(gt(lhs, const(rng.randint(-300, 300))))
        assert internal.solve(script).verdict == external.solve(script).verdict
