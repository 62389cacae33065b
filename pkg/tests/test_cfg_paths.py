import random

from overfix.cfg import (
    Cfg,
    CfgNodeKind,
    EXHAUSTED,
    FEASIBLE,
    INFEASIBLE,
    PathCursor,
    build_cfg,
    next_path,
    to_dot,
)
from overfix.config import AnalysisConfig

from conftest import analyze, typed_unit


def _cfg_for(src: str, fn: str = "main") -> Cfg:
    unit = typed_unit(src)
    return build_cfg(unit.functions[fn])


# -- construction shapes ----------------------------------------------------


def test_straight_line_counts():
    cfg = _cfg_for("int main(){ int a = 1; int b = 2; int c = 3; }")
    assert len(cfg.nodes) == 5  # entry, 3 statements, exit
    assert len(cfg.edges) == 4


def test_if_else_diamond():
    cfg = _cfg_for("int main(){ int a = 1; if (a > 0) { a = 2; } else { a = 3; } }")
    branches = [n for n in cfg.nodes if n.kind is CfgNodeKind.BRANCH]
    assert len(branches) == 1
    labels = sorted(lab for lab, _ in cfg.successors(branches[0].id))
    assert labels == ["false", "true"]
    joins = [n for n in cfg.nodes if n.kind is CfgNodeKind.JOIN]
    assert len(joins) == 1
    incoming = [e for e in cfg.edges if e[1] == joins[0].id]
    assert len(incoming) == 2  # both sides converge


def test_while_loop_back_edge():
    cfg = _cfg_for("int main(){ int x = 0; while (x < 3) { x = x + 1; } return x; }")
    headers = [n for n in cfg.nodes if n.loop_id is not None]
    assert len(headers) == 1
    header = headers[0]
    back_edges = [e for e in cfg.edges if e[1] == header.id and e[0] != cfg.entry]
    assert any(cfg.nodes[src].kind is CfgNodeKind.STMT for src, _, _ in back_edges)


def test_branch_nodes_have_exactly_two_labeled_edges():
    src = """
int main(void)
{
    int a = 1;
    if (a > 0) { a = 2; }
    while (a < 9) { a = a + 1; if (a == 5) { a = 6; } }
    for (int i = 0; i < 3; i = i + 1) { a = a - 1; }
    return a;
}
"""
    cfg = _cfg_for(src)
    for node in cfg.nodes:
        if node.kind is CfgNodeKind.BRANCH:
            labels = sorted(lab for lab, _ in cfg.successors(node.id))
            assert labels == ["false", "true"]


def test_dot_output():
    dot = to_dot(_cfg_for("int main(){ int a = 1; if (a) { a = 2; } return a; }"))
    assert dot.startswith("digraph") and "branch" in dot


# -- cursor mechanics --------------------------------------------------------


def test_cursor_two_paths_for_single_branch():
    cursor = PathCursor()
    seen = []
    alive = True
    while alive:
        taken = cursor.decide(0, node_id=7)
        seen.append(taken)
        nxt = next_path(cursor, FEASIBLE)
        alive = nxt is not EXHAUSTED
    assert seen == [True, False]


def test_cursor_flip_on_infeasible_reuses_prefix():
    cursor = PathCursor()
    assert cursor.decide(0, node_id=1) is True
    assert cursor.decide(1, node_id=2) is True
    nxt = next_path(cursor, INFEASIBLE)
    assert nxt is cursor
    assert cursor.checkpoint == 1          # resume at the flipped decision
    assert cursor.decisions[1].taken is False
    assert len(cursor.decisions) == 2      # prefix decision untouched


def test_cursor_forced_decisions_never_flip():
    cursor = PathCursor()
    cursor.decide(0, node_id=1)
    cursor.decide(1, node_id=9, forced=False)
    nxt = next_path(cursor, FEASIBLE)
    assert nxt is cursor
    assert cursor.checkpoint == 0
    assert cursor.decisions[0].taken is False


def test_cursor_exhaustion():
    cursor = PathCursor()
    cursor.decide(0, node_id=1)
    next_path(cursor, FEASIBLE)
    assert next_path(cursor, FEASIBLE) is EXHAUSTED


# -- enumeration through the analyzer ----------------------------------------


def test_if_else_enumerates_two_paths():
    res = analyze("""
int main(void)
{
    int data = 0;
    data = rand();
    if (data > 5) { data = 1; } else { data = 2; }
    return data;
}
""")
    assert res.stats.paths_complete == 2


def test_loop_unroll_bound_never_exceeded():
    config = AnalysisConfig(unroll_bound=10)
    res = analyze("""
int main(void)
{
    int again = 0;
    again = rand();
    while (again > 50) {
        again = rand();
    }
    return 0;
}
""", config=config)
    # 0..10 iterations are each one complete path; an 11th never happens
    assert res.stats.paths_complete == 11


def test_loop_unroll_bound_configurable():
    config = AnalysisConfig(unroll_bound=4)
    res = analyze("""
int main(void)
{
    int again = 0;
    again = rand();
    while (again > 50) {
        again = rand();
    }
    return 0;
}
""", config=config)
    assert res.stats.paths_complete == 5


def test_backtracking_reuses_prefix_node_visits():
    # correlated sequential branches: one of the four leaves is infeasible,
    # giving 3 complete paths, and the shared prefix statements are
    # interpreted exactly once thanks to snapshot restoration
    src = """
int main(void)
{
    int warm1 = 1;
    int warm2 = 2;
    int warm3 = 3;
    int data = 0;
    data = rand();
    int sink = 0;
    if (data > 10) { sink = 1; }
    if (data > 5) { sink = 2; }
    return sink;
}
"""
    unit = typed_unit(src)
    from overfix.symex import Analyzer
    analyzer = Analyzer(unit, AnalysisConfig())
    res = analyzer.run()
    assert res.stats.paths_complete == 3   # (T,T), (F,T), (F,F)
    assert res.stats.paths_infeasible == 1  # (T,F): data > 10 forces data > 5
    # prefix (6 stmts) once + suffixes: TT:3, FT:2, FF:1, infeasible attempt:0
    assert res.stats.node_visits == 12


# -- oracle: brute-force label sequences --------------------------------------


def brute_force_label_sequences(cfg: Cfg) -> set[tuple[str, ...]]:
    """All root-to-exit branch-label sequences, ignoring feasibility.

    Independent oracle for loop-free graphs: plain graph walk, no cursor.
    """
    out: set[tuple[str, ...]] = set()

    def walk(node_id: int, labels: tuple[str, ...]):
        node = cfg.node(node_id)
        if node.kind is CfgNodeKind.EXIT:
            out.add(labels)
            return
        for lab, dst in cfg.successors(node_id):
            walk(dst, labels + ((lab,) if lab != "none" else ()))

    walk(cfg.entry, ())
    return out


def _random_loop_free_source(rng: random.Random) -> str:
    """Random nest of branches whose conditions use independent fresh inputs,
    so every label sequence is feasible and the brute-force set is the truth."""
    n_inputs = rng.randint(2, 5)
    body: list[str] = ["int out = 0;"]
    for k in range(n_inputs):
        body.append(f"int in{k} = 0;")
        body.append(f"in{k} = rand();")
    counter = iter(range(n_inputs))

    def stmts(depth: int) -> list[str]:
        out = []
        for _ in range(rng.randint(1, 2)):
            k = next(counter, None)
            if k is not None and depth < 3 and rng.random() < 0.7:
                inner_t = stmts(depth + 1)
                cond = f"in{k} > {rng.randint(0, 80)}"
                if rng.random() < 0.5:
                    inner_e = stmts(depth + 1)
                    out.append(f"if ({cond}) {{ {' '.join(inner_t)} }} "
                               f"else {{ {' '.join(inner_e)} }}")
                else:
                    out.append(f"if ({cond}) {{ {' '.join(inner_t)} }}")
            else:
                out.append(f"out = {rng.randint(0, 9)};")
        return out

    body += stmts(0)
    body.append("return out;")
    return "int main(void) {\n" + "\n".join("    " + s for s in body) + "\n}\n"


def test_path_set_equals_brute_force_on_random_functions():
    rng = random.Random(811)
    config = AnalysisConfig(clamp_inputs=False)  # keep every side feasible
    for i in range(100):
        src = _random_loop_free_source(rng)
        unit = typed_unit(src, path=f"rand{i}.c")
        cfg = build_cfg(unit.functions["main"])
        expected = brute_force_label_sequences(cfg)

        from overfix.symex import Analyzer
        analyzer = Analyzer(unit, config, collect_paths=True)
        analyzer.run()
        got = set()
        for record in analyzer.paths:
            got.add(tuple("true" if taken else "false"
                          for _, taken, forced in record.decisions))
        assert got == expected, src


def test_enumeration_order_deterministic():
    src = """
int main(void)
{
    int v = 0;
    v = rand();
    if (v > 3) { v = 1; }
    if (v > 7) { v = 2; }
    return v;
}
"""
    orders = []
    for _ in range(2):
        unit = typed_unit(src)
        from overfix.symex import Analyzer
        analyzer = Analyzer(unit, AnalysisConfig(), collect_paths=True)
        analyzer.run()
        orders.append([tuple(d[:2] for d in r.decisions) for r in analyzer.paths])
    assert orders[0] == orders[1]
