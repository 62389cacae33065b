"""Corpus management: fault-annotation manifests, run cross-referencing,
corpus-wide repair, and the scalable benchmark program synthesizer.

A corpus program carries exactly one ``/* FAULT */`` comment on the line
before its genuine overflow; guarded twins elsewhere in the file must stay
silent.  ``run_report`` cross-references analyzer output against the scanned
manifest and fails the run on any missed or spurious report.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .config import AnalysisConfig
from .frontend import parse, resolve_types
from .frontend.ast import NodeKind
from .repair import RepairCandidate, confirm_correct_repair, generate_candidates
from .rewriter import apply_repair, count_loc
from .symex import AnalysisResult, Analyzer

FAULT_ANNOTATION = "/* FAULT */"


class ManifestError(Exception):
    pass


@dataclass(frozen=True)
class ExpectedFault:
    file: str
    function: str
    line: int

    def to_json(self) -> dict:
        return {"file": self.file, "function": self.function, "line": self.line}


def corpus_files(corpus_dir: str) -> list[str]:
    return sorted(
        os.path.join(corpus_dir, n) for n in os.listdir(corpus_dir)
        if n.endswith(".c"))


def scan_annotations(path: str, text: str | None = None) -> list[ExpectedFault]:
    """Expected-fault records for one file: annotation line + 1."""
    if text is None:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    lines = text.splitlines()
    marks = [i + 1 for i, line in enumerate(lines) if FAULT_ANNOTATION in line]
    if not marks:
        return []
    unit = resolve_types(parse(path, text))
    stmt_lines: dict[int, str] = {}
    for fn in unit.functions.values():
        for node in fn.body.walk():
            if node.kind in (NodeKind.VAR_DECL, NodeKind.ASSIGN, NodeKind.CALL,
                             NodeKind.RETURN, NodeKind.IF, NodeKind.WHILE,
                             NodeKind.FOR):
                stmt_lines.setdefault(unit.line_of(node.span), fn.name)
    out = []
    base = os.path.basename(path)
    for mark in marks:
        target = mark + 1
        if target not in stmt_lines:
            raise ManifestError(
                f"{base}:{mark}: fault annotation is not followed by a statement")
        out.append(ExpectedFault(base, stmt_lines[target], target))
    return out


def generate_test_cases(corpus_dir: str) -> list[ExpectedFault]:
    """Manifest of every annotated fault in the corpus directory."""
    manifest: list[ExpectedFault] = []
    for path in corpus_files(corpus_dir):
        manifest.extend(scan_annotations(path))
    return manifest


# ---------------------------------------------------------------------------
# Run cross-referencing


@dataclass
class RunReport:
    true_positives_found: int
    missed: list[ExpectedFault]
    spurious: list[dict]
    per_program_seconds: dict[str, float] = field(default_factory=dict)
    reports: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missed and not self.spurious

    def to_json(self) -> dict:
        return {
            "truePositivesFound": self.true_positives_found,
            "missed": [m.to_json() for m in self.missed],
            "spurious": self.spurious,
            "perProgramTimes": {k: round(v, 3) for k, v in
                                sorted(self.per_program_seconds.items())},
            "reports": self.reports,
        }


def run_report(results: dict[str, list[dict]], manifest: list[ExpectedFault],
               per_program_seconds: dict[str, float] | None = None) -> RunReport:
    """Cross-reference analyzer reports (as JSON dicts) against the manifest."""
    expected = {(m.file, m.line): m for m in manifest}
    found: set[tuple[str, int]] = set()
    spurious: list[dict] = []
    flat: list[dict] = []
    for file_name, reports in sorted(results.items()):
        for rep in reports:
            flat.append(rep)
            key = (file_name, rep["line"])
            if key in expected:
                if rep.get("function") and expected[key].function != rep["function"]:
                    spurious.append(rep)
                else:
                    found.add(key)
            else:
                spurious.append(rep)
    missed = [m for key, m in sorted(expected.items()) if key not in found]
    return RunReport(len(found), missed, spurious,
                     per_program_seconds or {}, flat)


def _analyze_one(path: str, config: AnalysisConfig) -> tuple[str, list[dict], float]:
    start = time.monotonic()
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    unit = resolve_types(parse(path, text))
    result = Analyzer(unit, config).run()
    elapsed = time.monotonic() - start
    docs = []
    for r in result.reports:
        doc = r.to_json()
        doc["function"] = r.function
        docs.append(doc)
    return os.path.basename(path), docs, elapsed


def corpus_run(corpus_dir: str, config: AnalysisConfig | None = None,
               jobs: int = 1) -> RunReport:
    """Analyze every corpus program and cross-reference the manifest."""
    config = config or AnalysisConfig()
    manifest = generate_test_cases(corpus_dir)
    files = corpus_files(corpus_dir)
    results: dict[str, list[dict]] = {}
    times: dict[str, float] = {}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for name, docs, elapsed in pool.map(
                    _analyze_one, files, [config] * len(files)):
                results[name] = docs
                times[name] = elapsed
    else:
        for path in files:
            name, docs, elapsed = _analyze_one(path, config)
            results[name] = docs
            times[name] = elapsed
    return run_report(results, manifest, times)


# ---------------------------------------------------------------------------
# Corpus-wide repair (fixpoint driver)


@dataclass
class FileRepairOutcome:
    file: str
    repairs_applied: int
    added_lines: list[int]
    verdicts: list[str]
    remaining_reports: int
    candidates: list[RepairCandidate] = field(default_factory=list)
    confirmations: list = field(default_factory=list)  # ConfirmOutcome per repair
    reports: list = field(default_factory=list)        # FaultReport per repair


def repair_file(path: str, config: AnalysisConfig | None = None,
                max_rounds: int = 10, write: bool = True,
                confirm: bool = True) -> FileRepairOutcome:
    """Apply rank-1 valid candidates until the file analyzes clean."""
    config = config or AnalysisConfig()
    outcome = FileRepairOutcome(os.path.basename(path), 0, [], [], 0)
    for _ in range(max_rounds):
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        unit = resolve_types(parse(path, text))
        result = Analyzer(unit, config).run()
        if not result.reports:
            outcome.remaining_reports = 0
            return outcome
        report = result.reports[0]
        candidates = [c for c in generate_candidates(unit, report, config) if c.valid]
        if not candidates:
            outcome.remaining_reports = len(result.reports)
            return outcome
        top = candidates[0]
        applied = apply_repair(path, text, top, write=write)
        outcome.repairs_applied += 1
        outcome.added_lines.append(top.added_lines)
        outcome.candidates.append(top)
        outcome.reports.append(report)
        if confirm:
            confirmation = confirm_correct_repair(
                path, applied.new_text, report, top, config,
                {r.line for r in result.reports})
            top.correct = confirmation.verdict == "correct"
            outcome.verdicts.append(confirmation.verdict)
            outcome.confirmations.append(confirmation)
        if not write:
            outcome.remaining_reports = len(result.reports) - 1
            return outcome
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    unit = resolve_types(parse(path, text))
    outcome.remaining_reports = len(Analyzer(unit, config).run().reports)
    return outcome


# ---------------------------------------------------------------------------
# Benchmark program synthesizer


@dataclass(frozen=True)
class SynthParams:
    # chain + main + a decoy frame must fit inside the analyzer's
    # default call-depth bound of 8
    target_loc: int = 6000
    call_chain_len: int = 6
    loop_iters: int = 3
    decoy_count: int = 4
    rng_seed: int = 1


class ParamsInfeasible(Exception):
    pass


_SEED_SHAPES = {
    1: ("add-const", "int result = data + 9;"),
    2: ("mul-equal", "int result = data * data;"),
    3: ("mul-neg-const", "int result = data * -3;"),
    4: ("generic-add", "int result = data + extra;"),
    5: ("generic-mul", "int result = data * extra;"),
}

_STAGE_LINES = 12   # non-blank lines contributed by one padding stage


def synthesize_program(seed: int, params: SynthParams) -> str:
    """Deterministic large benchmark program with one deep seeded overflow.

    The fault sits behind a chain of ``call_chain_len`` calls; ``decoy_count``
    guarded sites must stay silent; padding stages and fixed-trip loops bring
    the program to ``target_loc`` non-blank lines within 5%.
    """
    import random

    if seed not in _SEED_SHAPES:
        raise ParamsInfeasible(f"seed must be 1..5, got {seed}")
    shape_name, fault_stmt = _SEED_SHAPES[seed]
    needs_extra = seed in (4, 5)

    def build(n_stages: int) -> str:
        rng = random.Random(params.rng_seed)
        lines: list[str] = []
        emit = lines.append
        emit("/*")
        emit(f" * synthesized benchmark: seed {seed} ({shape_name}),")
        emit(f" * chain {params.call_chain_len}, loops {params.loop_iters}, "
             f"decoys {params.decoy_count}, rng {params.rng_seed}")
        emit(" */")
        emit("#include <stdio.h>")
        emit("#include <stdlib.h>")
        emit("#include <limits.h>")
        emit("#include <math.h>")
        emit("")

        for i in range(n_stages):
            a = rng.randint(1, 9)
            emit(f"int stage_{i}(int seed_val)")
            emit("{")
            emit(f"    int acc = {a};")
            emit("    int step = 1;")
            emit("    int i = 0;")
            emit(f"    for (i = 0; i < {params.loop_iters}; i = i + 1) {{")
            emit(f"        acc = acc + {a};")
            emit("    }")
            emit("    step = acc / 2;")
            emit(f"    printf(\"stage {i}: %d\\n\", step);")
            emit("    return step;")
            emit("}")
            emit("")

        for i in range(params.decoy_count):
            lim = rng.randint(5, 10)
            emit(f"int decoy_{i}(int value)")
            emit("{")
            emit("    int result = 0;")
            emit(f"    if (value >= 0 && value <= {lim}) {{")
            emit(f"        result = value + {lim};")
            emit("    } else {")
            emit("        result = 0;")
            emit("    }")
            emit(f"    printf(\"decoy {i}: %d\\n\", result);")
            emit("    return result;")
            emit("}")
            emit("")

        sig_tail = "(int data, int extra)" if needs_extra else "(int data)"
        for depth in range(params.call_chain_len, 0, -1):
            deeper = f"chain_{depth + 1}" if depth < params.call_chain_len else None
            emit(f"int chain_{depth}{sig_tail}")
            emit("{")
            if deeper is None:
                emit("    /* FAULT */")
                emit(f"    {fault_stmt}")
                emit("    printf(\"deep: %d\\n\", result);")
                emit("    return result;")
            else:
                if params.decoy_count:
                    emit(f"    int fwd = decoy_{(depth - 1) % params.decoy_count}(data);")
                else:
                    emit("    int fwd = data;")
                emit(f"    printf(\"chain {depth}: %d\\n\", fwd);")
                call_args = "(data, extra)" if needs_extra else "(data)"
                emit(f"    return {deeper}{call_args};")
            emit("}")
            emit("")

        emit("int main(void)")
        emit("{")
        emit("    int data = 0;")
        emit("    int total = 0;")
        emit("    data = rand();")
        if needs_extra:
            emit("    int extra = 0;")
            emit("    extra = rand();")
        for i in range(n_stages):
            emit(f"    total = stage_{i}(total);")
        main_args = "(data, extra)" if needs_extra else "(data)"
        emit(f"    total = chain_1{main_args};")
        emit("    printf(\"total %d\\n\", total);")
        emit("    return 0;")
        emit("}")
        return "\n".join(lines) + "\n"

    # one stage costs its own body plus the call line in main
    per_stage = _STAGE_LINES + 1
    estimate = max((params.target_loc - 120) // per_stage, 1)
    text = build(estimate)
    correction = (params.target_loc - count_loc(text)) // per_stage
    n_stages = estimate + correction
    if n_stages < 1:
        raise ParamsInfeasible(
            f"target_loc {params.target_loc} too small for chain/decoy structure")
    text = build(n_stages)
    loc = count_loc(text)
    if abs(loc - params.target_loc) > max(0.05 * params.target_loc, 40):
        raise ParamsInfeasible(
            f"line budget missed: produced {loc}, wanted {params.target_loc}")
    return text
