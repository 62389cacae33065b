#!/usr/bin/env python3
"""Regenerates the bundled mini-corpus under src/overfix/corpus/.

Thirty CWE-190 test-suite style programs: every guard-pattern shape crossed
with the four flow variants (direct, call-chained, loop-carried, branch-mixed)
over at least three of the five integer types.  Each file has exactly one annotated genuine
overflow plus guarded twins that must stay silent.  All literals stay inside
the 8-bit analog domain so verdicts agree between the exhaustive internal
backend and a full-scale external solver.
"""

from __future__ import annotations

import os
import sys

CORPUS_DIR = os.path.join(os.path.dirname(__file__), os.pardir,
                          "src", "overfix", "corpus")

# (shape, variant, ctype) per case number
CASES = [
    ("add_const", "direct", "int"),
    ("add_const", "call", "short"),
    ("add_const", "loop", "unsigned int"),
    ("add_const", "branch", "int64_t"),
    ("add_const", "direct", "char"),
    ("mul_neg_const", "direct", "int"),
    ("mul_neg_const", "call", "short"),
    ("mul_neg_const", "loop", "int"),
    ("mul_neg_const", "branch", "int64_t"),
    ("mul_equal", "direct", "int"),
    ("mul_equal", "call", "int64_t"),
    ("mul_equal", "loop", "short"),
    ("mul_equal", "branch", "char"),
    ("mul_equal", "direct", "unsigned int"),
    ("generic_add", "direct", "int"),
    ("generic_add", "call", "unsigned int"),
    ("generic_add", "loop", "int"),
    ("generic_add", "branch", "int64_t"),
    ("generic_mul", "direct", "int"),
    ("generic_mul", "call", "short"),
    ("generic_mul", "branch", "int64_t"),
    ("generic_mul", "loop", "int"),
    ("add_const", "call", "int64_t"),
    ("mul_equal", "call", "short"),
    ("generic_add", "direct", "short"),
    ("mul_neg_const", "direct", "int64_t"),
    ("add_const", "branch", "unsigned int"),
    ("generic_mul", "direct", "unsigned int"),
    ("mul_equal", "loop", "int"),
    ("generic_add", "branch", "char"),
]

SCANF_FMT = {"short": "%hd", "unsigned int": "%u", "int64_t": "%lld", "char": "%c"}

# guard limits chosen to be safe at both the analog and full scales
GOOD_LIMIT = {
    "add_const": 100,
    "mul_neg_const": 13,
    "mul_equal": 11,
    "generic_add": 60,
    "generic_mul": 11,
}

UNSIGNED = {"unsigned int"}

N_PAD_STAGES = 17


def source_lines(name, ctype, var="data"):
    if ctype == "int":
        return [f"    {var} = rand();"]
    fmt = SCANF_FMT[ctype]
    return [f'    fscanf(stdin, "{fmt}", &{var});']


def print_line(ctype, expr):
    if ctype == "int64_t":
        return f'    printf("%d\\n", (int){expr});'
    if ctype == "unsigned int":
        return f'    printf("%u\\n", {expr});'
    return f'    printf("%d\\n", (int){expr});'


def fault_stmt(shape, ctype, var="data", extra="extra"):
    """Assignment-form faulty statement (result declared separately)."""
    if shape == "add_const":
        return f"result = {var} + 9;"
    if shape == "mul_neg_const":
        return f"result = {var} * -3;"
    if shape == "mul_equal":
        return f"result = {var} * {var};"
    if shape == "generic_add":
        return f"result = {var} + {extra};"
    return f"result = {var} * {extra};"


def carried_stmt(shape, var="data", acc="acc"):
    if shape == "add_const":
        return f"{var} = {var} + 9;"
    if shape == "mul_neg_const":
        return f"{var} = {var} * -3;"
    if shape == "mul_equal":
        return f"{acc} = {var} * {var};"
    if shape == "generic_add":
        return f"{acc} = {acc} + {var};"
    return f"{acc} = {acc} * {var};"


def loop_iters(shape):
    return 5 if shape in ("add_const",) else 2


def needs_extra(shape):
    return shape in ("generic_add", "generic_mul")


def guard_cond(shape, ctype, var="data", extra="extra"):
    lim = GOOD_LIMIT[shape]
    unsigned = ctype in UNSIGNED
    if needs_extra(shape):
        if unsigned:
            return f"{var} <= {lim} && {extra} <= {lim}"
        return (f"{var} <= {lim} && {var} >= -{lim} && "
                f"{extra} <= {lim} && {extra} >= -{lim}")
    if unsigned:
        return f"{var} <= {lim}"
    return f"{var} <= {lim} && {var} >= -{lim}"


def banner(case_no, shape, variant, ctype):
    flow = {
        "direct": "the tainted value reaches the arithmetic directly",
        "call": "the tainted value travels through a helper call chain",
        "loop": "the arithmetic runs inside a counted loop",
        "branch": "the arithmetic sits behind a non-protective branch",
    }[variant]
    return [
        "/*",
        f" * mini-corpus case {case_no:02d}",
        f" * shape: {shape}   flow: {variant}   type: {ctype}",
        " *",
        f" * One genuine overflow site is annotated below; {flow}.",
        " * The good_* twins apply range guards or constant inputs and must",
        " * never be reported.  All literals stay inside the 8-bit analog",
        " * domain so verdicts agree across solver backends.",
        " *",
        " * Derived from the flow-variant structure of public CWE-190 test",
        " * suites; rewritten for the supported language subset.",
        " */",
    ]


def includes():
    return ["#include <stdio.h>", "#include <stdlib.h>", "#include <limits.h>",
            "#include <stdint.h>", "#include <math.h>", ""]


def pad_stage(case_no, i):
    a = (case_no * 7 + i * 3) % 9 + 1
    b = (case_no * 5 + i * 11) % 9 + 1
    return [
        f"void case{case_no:02d}_stage_{i}(void)",
        "{",
        f"    int acc = {a};",
        f"    int step = {b};",
        "    int k = 0;",
        "    for (k = 0; k < 3; k = k + 1) {",
        f"        acc = acc + {b};",
        "    }",
        "    step = acc / 2;",
        f"    step = step % 7;",
        f'    printf("case {case_no:02d} stage {i}: %d\\n", step);',
        "}",
        "",
    ]


def good_guarded(case_no, shape, variant, ctype):
    """The guarded twin: same arithmetic, protective range check."""
    ex = needs_extra(shape)
    lines = [f"void case{case_no:02d}_good_guarded(void)", "{",
             f"    {ctype} data = 0;"]
    if ex:
        lines.append(f"    {ctype} extra = 0;")
    lines += source_lines(case_no, ctype)
    if ex:
        lines += source_lines(case_no, ctype, "extra")
    lines.append(f"    {ctype} result = 0;")
    lines.append(f"    if ({guard_cond(shape, ctype)}) {{")
    lines.append("        " + fault_stmt(shape, ctype))
    lines.append("        " + print_line(ctype, "result").strip())
    lines.append("    }")
    lines.append("}")
    lines.append("")
    return lines


def good_constant(case_no, shape, ctype):
    ex = needs_extra(shape)
    lines = [f"void case{case_no:02d}_good_constant(void)", "{",
             f"    {ctype} data = 5;"]
    if ex:
        lines.append(f"    {ctype} extra = 4;")
    lines.append(f"    {ctype} result = 0;")
    lines.append("    " + fault_stmt(shape, ctype))
    lines.append("    " + print_line(ctype, "result").strip())
    lines.append("}")
    lines.append("")
    return lines


def good_early_return(case_no, shape, ctype):
    """Guard via early return instead of an enclosing branch."""
    ex = needs_extra(shape)
    lim = GOOD_LIMIT[shape]
    lines = [f"void case{case_no:02d}_good_early(void)", "{",
             f"    {ctype} data = 0;"]
    if ex:
        lines.append(f"    {ctype} extra = 1;")
    lines += source_lines(case_no, ctype)
    unsigned = ctype in UNSIGNED
    if unsigned:
        lines.append(f"    if (data > {lim}) {{")
    else:
        lines.append(f"    if (data > {lim} || data < -{lim}) {{")
    lines.append("        return;")
    lines.append("    }")
    lines.append(f"    {ctype} result = 0;")
    lines.append("    " + fault_stmt(shape, ctype))
    lines.append("    " + print_line(ctype, "result").strip())
    lines.append("}")
    lines.append("")
    return lines


def bad_flow(case_no, shape, variant, ctype):
    ex = needs_extra(shape)
    decl = [f"    {ctype} data = 0;"]
    if ex:
        decl.append(f"    {ctype} extra = 0;")
    src = source_lines(case_no, ctype)
    if ex:
        src += source_lines(case_no, ctype, "extra")

    if variant == "direct":
        return [f"void case{case_no:02d}_bad(void)", "{", *decl,
                f"    {ctype} result = 0;", *src,
                "    /* FAULT */",
                "    " + fault_stmt(shape, ctype),
                "    " + print_line(ctype, "result").strip(),
                "}", ""]

    if variant == "branch":
        return [f"void case{case_no:02d}_bad(void)", "{", *decl,
                f"    {ctype} result = 0;", *src,
                "    if (data != 42) {",
                "        /* FAULT */",
                "        " + fault_stmt(shape, ctype),
                "        " + print_line(ctype, "result").strip(),
                "    }",
                "}", ""]

    if variant == "loop":
        iters = loop_iters(shape)
        body = carried_stmt(shape)
        uses_acc = shape in ("mul_equal", "generic_add", "generic_mul")
        lines = [f"void case{case_no:02d}_bad(void)", "{", *decl]
        if uses_acc:
            acc_init = "1" if shape == "generic_mul" else "0"
            lines.append(f"    {ctype} acc = {acc_init};")
        lines += ["    int k = 0;", *src,
                  f"    for (k = 0; k < {iters}; k = k + 1) {{",
                  "        /* FAULT */",
                  "        " + body,
                  "    }"]
        result_var = "acc" if uses_acc else "data"
        lines.append("    " + print_line(ctype, result_var).strip())
        lines += ["}", ""]
        return lines

    # call-chained: tainted value goes through two helpers; fault is deepest
    params = f"{ctype} value" + (f", {ctype} other" if ex else "")
    args = "value" + (", other" if ex else "")
    deep_stmt = fault_stmt(shape, ctype, "value", "other")
    lines = [
        f"{ctype} case{case_no:02d}_deep({params})",
        "{",
        f"    {ctype} result = 0;",
        "    /* FAULT */",
        "    " + deep_stmt,
        "    return result;",
        "}",
        "",
        f"{ctype} case{case_no:02d}_middle({params})",
        "{",
        f"    {ctype} forwarded = 0;",
        f"    forwarded = case{case_no:02d}_deep({args});",
        "    return forwarded;",
        "}",
        "",
        f"void case{case_no:02d}_bad(void)",
        "{",
        *decl,
        f"    {ctype} result = 0;",
        *src,
        f"    result = case{case_no:02d}_middle(data"
        + (", extra" if ex else "") + ");",
        "    " + print_line(ctype, "result").strip(),
        "}",
        "",
    ]
    return lines


def main_fn(case_no):
    lines = ["int main(void)", "{"]
    for i in range(N_PAD_STAGES):
        lines.append(f"    case{case_no:02d}_stage_{i}();")
    lines.append(f"    case{case_no:02d}_good_guarded();")
    lines.append(f"    case{case_no:02d}_good_constant();")
    lines.append(f"    case{case_no:02d}_good_early();")
    lines.append(f"    case{case_no:02d}_bad();")
    lines.append("    return 0;")
    lines.append("}")
    return lines


def build_case(case_no, shape, variant, ctype):
    lines = banner(case_no, shape, variant, ctype) + includes()
    for i in range(N_PAD_STAGES):
        lines += pad_stage(case_no, i)
    lines += good_guarded(case_no, shape, variant, ctype)
    lines += good_constant(case_no, shape, ctype)
    lines += good_early_return(case_no, shape, ctype)
    lines += bad_flow(case_no, shape, variant, ctype)
    lines += main_fn(case_no)
    return "\n".join(lines) + "\n"


def main():
    os.makedirs(CORPUS_DIR, exist_ok=True)
    total_loc = 0
    for idx, (shape, variant, ctype) in enumerate(CASES, start=1):
        text = build_case(idx, shape, variant, ctype)
        type_tag = ctype.replace(" ", "_").replace("int64_t", "int64")
        name = f"case{idx:02d}_{shape}_{variant}_{type_tag}.c"
        with open(os.path.join(CORPUS_DIR, name), "w") as fh:
            fh.write(text)
        loc = sum(1 for ln in text.splitlines() if ln.strip())
        total_loc += loc
        print(f"{name}: {loc} loc")
    print(f"total: {total_loc} loc across {len(CASES)} programs")


if __name__ == "__main__":
    sys.exit(main())
