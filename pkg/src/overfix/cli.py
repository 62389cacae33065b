"""Command-line interface."""

from __future__ import annotations

import argparse
import json
import os
import shutil
import subprocess
import sys
import tempfile
import time

from . import __version__
from .config import AnalysisConfig
from .bounds import ANALOG_8BIT, FULL_SCALE
from .frontend import ast_dump, parse, resolve_types
from .frontend.errors import FrontendError


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _config_from_args(args) -> AnalysisConfig:
    config = AnalysisConfig()
    if getattr(args, "unroll", None) is not None:
        config.unroll_bound = args.unroll
    if getattr(args, "call_depth", None) is not None:
        config.call_depth = args.call_depth
    if getattr(args, "max_faults", None) is not None:
        config.max_faults = args.max_faults
    if getattr(args, "first_n_per_path", None) is not None:
        config.first_n_per_path = args.first_n_per_path
    if getattr(args, "solver", None):
        config.solver_command = args.solver
    elif os.environ.get("OVERFIX_SOLVER"):
        config.solver_command = os.environ["OVERFIX_SOLVER"]
    if getattr(args, "timeout", None) is not None:
        config.solver_timeout = args.timeout
    if getattr(args, "profile", None):
        config.profile = FULL_SCALE if args.profile == "full" else ANALOG_8BIT
    if getattr(args, "paper_literal_min", False):
        config.literal_min = True
    if getattr(args, "handler", None) == "die":
        config.handler_die = True
    if getattr(args, "fold_sqrt", False):
        config.fold_sqrt = True
    if getattr(args, "no_clamp_inputs", False):
        config.clamp_inputs = False
    return config


def _add_analysis_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--unroll", type=int, help="loop unroll bound (default 10)")
    p.add_argument("--call-depth", type=int, dest="call_depth",
                   help="call/recursion depth bound (default 8)")
    p.add_argument("--solver", help="external SMT solver command (else internal backend)")
    p.add_argument("--timeout", type=float, help="solver timeout in seconds")
    p.add_argument("--profile", choices=["full", "analog"],
                   help="bounds profile (default: full with external solver, analog otherwise)")
    p.add_argument("--paper-literal-min", action="store_true", dest="paper_literal_min",
                   help="use the -MAX+1 lower-bound convention")
    p.add_argument("--no-clamp-inputs", action="store_true", dest="no_clamp_inputs",
                   help="leave fresh inputs unbounded instead of type-bounded")


def cmd_dump_ast(args) -> int:
    unit = resolve_types(parse(args.file, _read(args.file)))
    sys.stdout.write(ast_dump(unit))
    return 0


def cmd_dump_cfg(args) -> int:
    from .cfg import build_cfg, to_dot

    unit = resolve_types(parse(args.file, _read(args.file)))
    if args.fn not in unit.functions:
        print(f"error: no function named {args.fn!r}", file=sys.stderr)
        return 2
    sys.stdout.write(to_dot(build_cfg(unit.functions[args.fn])))
    return 0


def cmd_dump_smt(args) -> int:
    from .constraints import SmtScript, emit
    from .symex import Analyzer

    config = _config_from_args(args)
    unit = resolve_types(parse(args.file, _read(args.file)))
    analyzer = Analyzer(unit, config, collect_paths=True)
    analyzer.run(entry=args.entry)
    paths = analyzer.paths
    if not paths:
        print("no complete paths", file=sys.stderr)
        return 2
    if args.path >= len(paths):
        print(f"error: path index {args.path} out of range (have {len(paths)})",
              file=sys.stderr)
        return 2
    record = paths[args.path]
    script = SmtScript()
    for v in record.decls:
        script.declare(v)
    script.asserts = list(record.asserts)
    sys.stdout.write(emit(script))
    return 0


def cmd_analyze(args) -> int:
    from .symex import Analyzer

    config = _config_from_args(args)
    try:
        unit = resolve_types(parse(args.file, _read(args.file)))
    except FrontendError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    result = Analyzer(unit, config).run(entry=args.entry)
    if args.json:
        docs = [r.to_json() for r in result.reports]
        print(json.dumps(docs, indent=2))
    else:
        for r in result.reports:
            print(f"{os.path.basename(r.file)}:{r.line}: {r.checker_id} "
                  f"[{r.shape.shape.value}/{r.bounds.type_name}] {r.statement_text}")
        print(f"{len(result.reports)} fault(s); "
              f"{result.stats.paths_complete} path(s) explored, "
              f"{result.stats.solver_queries} solver queries")
    for warning in result.stats.warnings[:10]:
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def cmd_repair(args) -> int:
    from .repair import confirm_correct_repair, generate_candidates
    from .rewriter import apply_repair
    from .symex import Analyzer

    config = _config_from_args(args)
    text = _read(args.file)
    unit = resolve_types(parse(args.file, text))
    result = Analyzer(unit, config).run()
    reports = result.reports
    if args.problem:
        reports = [r for r in reports if r.problem_id == args.problem]
        if not reports:
            print(f"error: no report with problem id {args.problem!r}", file=sys.stderr)
            return 2
    if not reports:
        print("no faults to repair")
        return 0
    report = reports[0]
    candidates = generate_candidates(unit, report, config)
    if args.pattern:
        candidates = [c for c in candidates if c.pattern_id == args.pattern]
    candidates = [c for c in candidates if c.valid]
    if not candidates:
        print("no valid repair candidates", file=sys.stderr)
        return 1
    top = candidates[0]
    applied = apply_repair(args.file, text, top, write=not args.dry_run,
                           keep_backup=not args.no_backup)
    sys.stdout.write(applied.diff)
    if args.dry_run:
        return 0
    outcome = confirm_correct_repair(args.file, applied.new_text, report, top,
                                     config, {r.line for r in result.reports})
    print(f"verification: {outcome.verdict}")
    return 0 if outcome.verdict == "correct" else 1


def cmd_corpus_run(args) -> int:
    from .harness import corpus_run

    config = _config_from_args(args)
    report = corpus_run(args.dir, config, jobs=args.jobs)
    doc = report.to_json()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
    print(f"true positives: {report.true_positives_found}  "
          f"missed: {len(report.missed)}  spurious: {len(report.spurious)}")
    return 0 if report.ok else 1


def cmd_corpus_repair(args) -> int:
    from .harness import corpus_files, repair_file

    config = _config_from_args(args)
    failures = 0
    for path in corpus_files(args.dir):
        outcome = repair_file(path, config)
        status = "ok" if not outcome.remaining_reports else "INCOMPLETE"
        print(f"{outcome.file}: {outcome.repairs_applied} repair(s) "
              f"{outcome.verdicts} {status}")
        if outcome.remaining_reports or any(v != "correct" for v in outcome.verdicts):
            failures += 1
    return 0 if failures == 0 else 1


def cmd_synth(args) -> int:
    from .harness import SynthParams, synthesize_program

    params = SynthParams(target_loc=args.loc, call_chain_len=args.chain,
                         loop_iters=args.loop_iters, decoy_count=args.decoys,
                         rng_seed=args.rng_seed)
    text = synthesize_program(args.seed, params)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_bench_runtime(args) -> int:
    """Compile and time corpus programs before/after repair (needs CC)."""
    cc = os.environ.get("CC") or shutil.which("cc")
    if not cc:
        print("bench-runtime: no C compiler (set CC); skipping", file=sys.stderr)
        return 0
    from .harness import corpus_files

    runtime_stub = (
        "#include <stdio.h>\n"
        "void log_or_die(const char *file, const char *fault_id, int line)\n"
        "{\n"
        '    fprintf(stderr, "%s:%d: blocked %s\\n", file, line, fault_id);\n'
        "}\n")
    with tempfile.TemporaryDirectory() as tmp:
        stub_path = os.path.join(tmp, "overfix_runtime.c")
        with open(stub_path, "w") as fh:
            fh.write(runtime_stub)
        total = ok = 0
        for path in corpus_files(args.dir):
            total += 1
            exe = os.path.join(tmp, os.path.basename(path) + ".bin")
            proc = subprocess.run([cc, "-O2", path, stub_path, "-o", exe, "-lm"],
                                  capture_output=True, text=True)
            if proc.returncode != 0:
                print(f"{os.path.basename(path)}: compile failed", file=sys.stderr)
                continue
            start = time.monotonic()
            subprocess.run([exe], input="1\n" * 8, capture_output=True, text=True,
                           timeout=10)
            elapsed = time.monotonic() - start
            ok += 1
            print(f"{os.path.basename(path)}: {elapsed * 1000:.1f} ms")
        print(f"compiled and ran {ok}/{total}")
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    config = _config_from_args(args)
    host, _, port = args.bind.partition(":")
    serve(args.root, host or "127.0.0.1", int(port or "8353"), config,
          ui_dir=args.ui_dir)
    return 0


def main(argv: list[str] | None = None) -> int:
    top = argparse.ArgumentParser(
        prog="overfix",
        description="Detect and repair integer overflows in a C subset.")
    top.add_argument("--version", action="version", version=f"overfix {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dump-ast", help="emit the typed AST as JSON")
    p.add_argument("file")
    p.set_defaults(func=cmd_dump_ast)

    p = sub.add_parser("dump-cfg", help="emit a function's CFG as DOT")
    p.add_argument("file")
    p.add_argument("--fn", required=True)
    p.set_defaults(func=cmd_dump_cfg)

    p = sub.add_parser("dump-smt", help="print one path's constraint script")
    p.add_argument("file")
    p.add_argument("--path", type=int, default=0)
    p.add_argument("--entry")
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_dump_smt)

    p = sub.add_parser("analyze", help="report integer overflow faults")
    p.add_argument("file")
    p.add_argument("--entry")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-faults", type=int, dest="max_faults")
    p.add_argument("--first-n-per-path", type=int, dest="first_n_per_path")
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("repair", help="repair the first (or a given) fault in place")
    p.add_argument("file")
    p.add_argument("--problem", help="problem id to repair")
    p.add_argument("--pattern", help="repair pattern id to force")
    p.add_argument("--dry-run", action="store_true", dest="dry_run")
    p.add_argument("--no-backup", action="store_true", dest="no_backup")
    p.add_argument("--handler", choices=["log", "die"], default="log")
    p.add_argument("--fold-sqrt", action="store_true", dest="fold_sqrt")
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("corpus", help="corpus operations")
    corpus_sub = p.add_subparsers(dest="corpus_command", required=True)
    q = corpus_sub.add_parser("run", help="analyze a corpus and cross-check annotations")
    q.add_argument("dir")
    q.add_argument("--json", help="write the run report to this file")
    q.add_argument("--jobs", type=int, default=1)
    _add_analysis_flags(q)
    q.set_defaults(func=cmd_corpus_run)
    q = corpus_sub.add_parser("repair", help="auto-apply rank-1 repairs corpus-wide")
    q.add_argument("dir")
    _add_analysis_flags(q)
    q.set_defaults(func=cmd_corpus_repair)

    p = sub.add_parser("synth", help="synthesize a large seeded benchmark program")
    p.add_argument("--seed", type=int, required=True, choices=range(1, 6))
    p.add_argument("--loc", type=int, default=6000)
    p.add_argument("--chain", type=int, default=6)
    p.add_argument("--loop-iters", type=int, default=3, dest="loop_iters")
    p.add_argument("--decoys", type=int, default=4)
    p.add_argument("--rng-seed", type=int, default=1, dest="rng_seed")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("bench-runtime", help="compile and time repaired corpus programs")
    p.add_argument("dir")
    p.set_defaults(func=cmd_bench_runtime)

    p = sub.add_parser("serve", help="run the repair review service")
    p.add_argument("--root", required=True)
    p.add_argument("--bind", default="127.0.0.1:8353")
    p.add_argument("--ui-dir", dest="ui_dir",
                   default=os.path.join("frontend", "dist"))
    _add_analysis_flags(p)
    p.set_defaults(func=cmd_serve)

    args = top.parse_args(argv)
    try:
        return args.func(args)
    except FrontendError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
