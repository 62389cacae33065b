import random

import pytest

from overfix.bounds import CType
from overfix.frontend import (
    CSyntaxError,
    CTypeError,
    NodeKind,
    UnsupportedConstruct,
    ast_dump,
    parse,
    parse_with_diagnostics,
    pretty,
    resolve_types,
)
from overfix.frontend.ast import unit_equal

from conftest import typed_unit


def test_minimal_program():
    unit = parse("t.c", "int main(){ int a = 1 + 2; return 0; }")
    fns = unit.functions
    assert list(fns) == ["main"]
    decl = fns["main"].body.children[0]
    assert decl.kind is NodeKind.VAR_DECL
    assert decl.init.kind is NodeKind.BINARY and decl.init.op == "+"


def test_self_multiplication_statement():
    unit = typed_unit("int main(){ int data = 4; int r; r = data * data; return 0; }")
    assign = unit.functions["main"].body.children[2]
    assert assign.kind is NodeKind.ASSIGN
    rhs = assign.assigned_expr
    assert rhs.op == "*"
    assert unit.snippet(rhs.lhs.span) == unit.snippet(rhs.rhs.span) == "data"


def test_goto_is_unsupported():
    with pytest.raises(UnsupportedConstruct) as exc:
        parse("t.c", "int main(){ goto L; }")
    assert exc.value.construct == "goto"
    assert exc.value.line == 1


@pytest.mark.parametrize("src,construct", [
    ("int main(){ int a[3]; return 0; }", "array declaration"),
    ("union u { int a; };", "union"),
    ("int main(){ int x = 0; x++; return 0; }", "increment/decrement operator"),
    ("int main(){ int x = 0; x += 1; return 0; }", "compound assignment operator"),
    ("int main(){ switch (1) {} }", "switch"),
    ("long f(void){ return 0; }", "long"),
])
def test_out_of_subset_constructs(src, construct):
    with pytest.raises(UnsupportedConstruct) as exc:
        parse("t.c", src)
    assert exc.value.construct == construct


def test_syntax_error_position():
    with pytest.raises(CSyntaxError) as exc:
        parse("t.c", "int main(){ int a = ; }")
    assert exc.value.line == 1
    assert exc.value.col > 1


def test_parse_with_diagnostics_collects():
    unit, diags = parse_with_diagnostics("t.c", "int main(){ goto L; }")
    assert unit is None and len(diags) == 1


def test_include_lines_skipped_verbatim():
    src = "#include <stdio.h>\n#include <limits.h>\nint main(){ return 0; }\n"
    unit = parse("t.c", src)
    assert list(unit.functions) == ["main"]
    # spans still index into the original text
    fn = unit.functions["main"]
    assert unit.snippet(fn.span).startswith("int main")
    assert unit.line_of(fn.span) == 3


def test_span_exactness_and_linecol_roundtrip():
    src = "int main(void)\n{\n    int abc = 41;\n    abc = abc + 1;\n    return abc;\n}\n"
    unit = typed_unit(src)
    for node in unit.walk():
        lo, hi = node.span
        assert 0 <= lo <= hi <= len(src)
        line, col = unit.pos_to_linecol(lo)
        assert unit.linecol_to_pos(line, col) == lo
    assign = unit.functions["main"].body.children[1]
    assert unit.snippet(assign.span) == "abc = abc + 1;"


def test_dangling_else_binds_to_nearest_if():
    src = "int main(){ int a = 1; if (a) if (a > 0) a = 1; else a = 2; return a; }"
    unit = typed_unit(src)
    outer = unit.functions["main"].body.children[1]
    assert outer.kind is NodeKind.IF
    assert outer.else_stmt is None
    inner = outer.then_stmt
    assert inner.kind is NodeKind.IF and inner.else_stmt is not None


# -- type resolution -----------------------------------------------------


def test_promotion_short_plus_literal():
    unit = typed_unit("int main(){ short s = 1; int x = s + 1; return x; }")
    add = unit.functions["main"].body.children[1].init
    assert add.ctype is CType.INT


def test_usual_conversion_unsigned_wins():
    unit = typed_unit(
        "int main(){ unsigned int u = 1; int i = 2; unsigned int r = u * i; return 0; }")
    mul = unit.functions["main"].body.children[2].init
    assert mul.ctype is CType.UINT


def test_widening_to_int64():
    unit = typed_unit("int main(){ int64_t a = 1; int b = 2; int64_t c = a + b; return 0; }")
    add = unit.functions["main"].body.children[2].init
    assert add.ctype is CType.INT64


def test_every_expression_is_typed():
    src = """
int helper(int v) { return v * 2; }
int main(void)
{
    int data = 0;
    data = rand();
    if (data < 100 && data > -1) {
        int r = helper(data) + 1;
        printf("%d", r);
    }
    return 0;
}
"""
    unit = typed_unit(src)
    from overfix.frontend.ast import EXPR_KINDS
    for node in unit.walk():
        if node.kind in EXPR_KINDS:
            assert node.ctype is not None, node.kind


def test_undeclared_identifier_rejected():
    with pytest.raises(CTypeError) as exc:
        typed_unit("int main(){ x = 1; return 0; }")
    assert "undeclared" in exc.value.message


def test_arithmetic_on_pointer_rejected():
    with pytest.raises(CTypeError):
        typed_unit("int main(){ int *p = malloc(4); int x = p + 1; return 0; }")


def test_shadowing_rejected():
    with pytest.raises(CTypeError):
        typed_unit("int main(){ int x = 1; { int x = 2; } return x; }")


def test_limit_constants_resolve():
    unit = typed_unit("int main(){ int64_t a = LLONG_MAX; int b = INT_MIN; return 0; }")
    a = unit.functions["main"].body.children[0].init
    b = unit.functions["main"].body.children[1].init
    assert a.ctype is CType.INT64 and a.is_limit_const
    assert b.ctype is CType.INT and b.is_limit_const


def test_calls_in_conditions_rejected_except_sqrt():
    with pytest.raises(UnsupportedConstruct):
        typed_unit("int main(){ if (rand() > 0) { return 1; } return 0; }")
    unit = typed_unit(
        "int main(){ int b = 3; if (b > 0 && b >= sqrt(INT_MAX)) { return 1; } return 0; }")
    assert unit is not None


def test_extern_handler_declaration_parses():
    src = ("int main(){\n"
           "    extern void log_or_die(const char *file, const char *fault_id, int line);\n"
           '    log_or_die("t.c", "ID-Integer_Overflow_Fault", 3);\n'
           "    return 0;\n}\n")
    unit = typed_unit(src)
    assert unit is not None


def test_fscanf_address_argument():
    unit = typed_unit('int main(){ short s = 0; fscanf(stdin, "%hd", &s); return s; }')
    assert unit is not None
    with pytest.raises(UnsupportedConstruct):
        typed_unit("int main(){ int x = 0; int y = &x; return y; }")


# -- round-trip and determinism -------------------------------------------

ROUNDTRIP_SAMPLES = [
    "int main(){ int a = 1 + 2 * 3; return a; }",
    "int f(int x){ if (x > 0) { return x; } else { return -x; } }",
    "int main(){ int i; for (i = 0; i < 10; i = i + 1) { printf(\"%d\", i); } return 0; }",
    "int main(){ int x = 0; while (x < 5) { x = x + 1; } return x; }",
    "int main(){ int64_t v = LLONG_MAX; int c = (int)v; return c; }",
    "int g(void){ return 0; } int main(){ int r = g(); return r; }",
]


@pytest.mark.parametrize("src", ROUNDTRIP_SAMPLES)
def test_pretty_print_roundtrip(src):
    unit = typed_unit(src)
    again = typed_unit(pretty(unit), path="again.c")
    assert unit_equal(unit, again)


def test_ast_dump_deterministic():
    src = "int main(){ int a = 3; a = a * a; return a; }"
    d1 = ast_dump(typed_unit(src))
    d2 = ast_dump(typed_unit(src))
    assert d1 == d2
    assert '"kind": "BinaryExpr"' in d1


def _random_function(rng: random.Random) -> str:
    """Small random statement soup for round-trip fuzzing."""
    body = []
    names = ["a", "b", "c"]
    for i, n in enumerate(names):
        body.append(f"int {n} = {rng.randint(0, 50)};")
    for _ in range(rng.randint(1, 6)):
        kind = rng.choice(["assign", "if", "while"])
        lhs = rng.choice(names)
        e1, e2 = rng.choice(names), rng.randint(1, 9)
        if kind == "assign":
            op = rng.choice(["+", "*", "-", "/"])
            body.append(f"{lhs} = {e1} {op} {e2};")
        elif kind == "if":
            body.append(f"if ({e1} < {e2}) {{ {lhs} = {e2}; }} else {{ {lhs} = 0; }}")
        else:
            body.append(f"while ({lhs} > 0) {{ {lhs} = {lhs} - 1; }}")
    body.append("return a;")
    return "int main(void) {\n" + "\n".join("    " + s for s in body) + "\n}\n"


def test_roundtrip_randomized():
    rng = random.Random(20260811)
    for _ in range(60):
        src = _random_function(rng)
        unit = typed_unit(src)
        again = typed_unit(pretty(unit), path="again.c")
        assert unit_equal(unit, again), src
