"""Precise source rewriting: apply a repair block, emit diffs, preserve bytes.

Edits are span replacements against a checksummed base text.  Writes are
atomic (temp file + rename) with a ``.orig`` backup, the result must re-parse
before anything touches disk, and every byte outside the edited span is
preserved exactly.
"""

from __future__ import annotations

import difflib
import hashlib
import os
import re
import tempfile
from dataclasses import dataclass, field

from .frontend import parse, resolve_types
from .frontend.errors import FrontendError
from .repair import RepairCandidate


class StaleFile(Exception):
    """The file changed since the candidate was rendered."""


class OverlappingEdits(Exception):
    pass


class ReparseFailure(Exception):
    """The rewritten text no longer parses; nothing was written."""


def checksum(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class PatchPlan:
    file: str
    edits: list[tuple[tuple[int, int], str]]  # (span, replacement), sorted
    base_checksum: str

    def validate(self) -> None:
        spans = sorted(span for span, _ in self.edits)
        for (a_start, a_end), (b_start, b_end) in zip(spans, spans[1:]):
            if b_start < a_end:
                raise OverlappingEdits(f"edits overlap: {(a_start, a_end)} and {(b_start, b_end)}")


def apply_plan(text: str, plan: PatchPlan) -> str:
    if checksum(text) != plan.base_checksum:
        raise StaleFile(f"{plan.file}: content changed since the plan was made")
    plan.validate()
    out = []
    pos = 0
    for (start, end), replacement in sorted(plan.edits):
        out.append(text[pos:start])
        out.append(replacement)
        pos = end
    out.append(text[pos:])
    return "".join(out)


def unified_diff(before: str, after: str, path: str) -> str:
    lines = difflib.unified_diff(
        before.splitlines(keepends=True), after.splitlines(keepends=True),
        fromfile=f"a/{path}", tofile=f"b/{path}")
    return "".join(lines)


@dataclass
class AppliedRepair:
    file: str
    new_text: str
    diff: str
    backup_path: str | None


def plan_for_candidate(text: str, candidate: RepairCandidate, path: str) -> PatchPlan:
    if candidate.base_checksum and checksum(text) != candidate.base_checksum:
        raise StaleFile(f"{path}: content changed since the candidate was rendered")
    start, end = candidate.insertion_span
    if text[start:end] != candidate.report.statement_text:
        raise StaleFile(
            f"{path}: statement at {candidate.insertion_span} no longer matches")
    return PatchPlan(path, [(candidate.insertion_span, candidate.rendered_text)],
                     checksum(text))


def apply_repair(path: str, text: str, candidate: RepairCandidate,
                 write: bool = True, keep_backup: bool = True) -> AppliedRepair:
    """Replace the faulty statement with the rendered guard block.

    The result is re-parsed before any write; on failure the file is left
    untouched.  Writing is atomic and leaves a ``.orig`` backup by default.
    """
    plan = plan_for_candidate(text, candidate, path)
    new_text = apply_plan(text, plan)
    try:
        resolve_types(parse(path, new_text))
    except FrontendError as exc:
        raise ReparseFailure(f"{path}: rewritten text does not parse: {exc}") from exc
    diff = unified_diff(text, new_text, os.path.basename(path))
    backup = None
    if write:
        if keep_backup:
            backup = path + ".orig"
            if not os.path.exists(backup):
                with open(backup, "w", encoding="utf-8") as fh:
                    fh.write(text)
        _atomic_write(path, new_text)
    return AppliedRepair(path, new_text, diff, backup)


def _atomic_write(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".overfix-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(content)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


# ---------------------------------------------------------------------------
# Unified diff application (used for round-trip checks and by the service)

_HUNK_RE = re.compile(r"^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@")


def apply_unified_diff(original: str, diff: str) -> str:
    """Re-create the new text from the original plus a unified diff."""
    src = original.splitlines(keepends=True)
    out: list[str] = []
    idx = 0
    lines = diff.splitlines(keepends=True)
    i = 0
    while i < len(lines) and not lines[i].startswith("@@"):
        i += 1
    while i < len(lines):
        m = _HUNK_RE.match(lines[i])
        if m is None:
            raise ValueError(f"malformed hunk header: {lines[i]!r}")
        old_start = int(m.group(1))
        old_len = int(m.group(2) or "1")
        hunk_start = old_start - 1 if old_len else old_start
        out.extend(src[idx:hunk_start])
        idx = hunk_start
        i += 1
        while i < len(lines) and not lines[i].startswith("@@"):
            line = lines[i]
            if line.startswith("\\"):
                pass  # "no newline" marker
            elif line.startswith("-"):
                idx += 1
            elif line.startswith("+"):
                out.append(line[1:])
            elif line.startswith(" ") or line == "\n":
                out.append(src[idx])
                idx += 1
            else:
                break
            i += 1
    out.extend(src[idx:])
    return "".join(out)


# ---------------------------------------------------------------------------
# Size accounting


def count_loc(text: str) -> int:
    """Non-blank line count."""
    return sum(1 for line in text.splitlines() if line.strip())


@dataclass
class BlowupReport:
    loc_before: int
    loc_after: int
    repairs: int
    per_repair_loc: list[int] = field(default_factory=list)

    @property
    def loc_added_total(self) -> int:
        return self.loc_after - self.loc_before

    @property
    def loc_added_percent(self) -> float:
        if self.loc_before == 0:
            return 0.0
        return 100.0 * self.loc_added_total / self.loc_before

    def to_json(self) -> dict:
        return {
            "locBefore": self.loc_before,
            "locAfter": self.loc_after,
            "repairs": self.repairs,
            "locAddedTotal": self.loc_added_total,
            "locAddedPercent": round(self.loc_added_percent, 4),
            "perRepairLoc": self.per_repair_loc,
        }


def measure_blowup(before_texts: list[str], after_texts: list[str],
                   per_repair: list[int] | None = None) -> BlowupReport:
    before = sum(count_loc(t) for t in before_texts)
    after = sum(count_loc(t) for t in after_texts)
    per_repair = per_repair or []
    return BlowupReport(before, after, len(per_repair), per_repair)
