/**
 * Unified-diff parsing for display.
 *
 * The service's diff is the single source of truth; this module only
 * classifies its lines and computes which new-file lines were added so the
 * side-by-side view can highlight the inserted guard block.
 */

export type RowKind = "context" | "add" | "del" | "meta";

export interface DiffRow {
  kind: RowKind;
  oldLine: number | null;
  newLine: number | null;
  text: string;
}

export interface Hunk {
  header: string;
  rows: DiffRow[];
}

const HUNK_RE = /^@@ -(\d+)(?:,(\d+))? \+(\d+)(?:,(\d+))? @@/;

export function parseUnifiedDiff(diff: string): Hunk[] {
  const hunks: Hunk[] = [];
  let current: Hunk | null = null;
  let oldNo = 0;
  let newNo = 0;
  for (const raw of diff.split("\n")) {
    if (raw.startsWith("---") || raw.startsWith("+++")) continue;
    const m = HUNK_RE.exec(raw);
    if (m) {
      oldNo = parseInt(m[1], 10);
      newNo = parseInt(m[3], 10);
      current = { header: raw, rows: [] };
      hunks.push(current);
      continue;
    }
    if (!current || raw === "") continue;
    if (raw.startsWith("\\")) {
      current.rows.push({ kind: "meta", oldLine: null, newLine: null, text: raw });
    } else if (raw.startsWith("+")) {
      current.rows.push({ kind: "add", oldLine: null, newLine: newNo, text: raw.slice(1) });
      newNo += 1;
    } else if (raw.startsWith("-")) {
      current.rows.push({ kind: "del", oldLine: oldNo, newLine: null, text: raw.slice(1) });
      oldNo += 1;
    } else {
      current.rows.push({
        kind: "context",
        oldLine: oldNo,
        newLine: newNo,
        text: raw.startsWith(" ") ? raw.slice(1) : raw,
      });
      oldNo += 1;
      newNo += 1;
    }
  }
  return hunks;
}

/** 1-based new-file line numbers that the diff added. */
export function addedNewLines(diff: string): Set<number> {
  const added = new Set<number>();
  for (const hunk of parseUnifiedDiff(diff)) {
    for (const row of hunk.rows) {
      if (row.kind === "add" && row.newLine !== null) added.add(row.newLine);
    }
  }
  return added;
}

/** 1-based old-file line numbers that the diff removed. */
export function removedOldLines(diff: string): Set<number> {
  const removed = new Set<number>();
  for (const hunk of parseUnifiedDiff(diff)) {
    for (const row of hunk.rows) {
      if (row.kind === "del" && row.oldLine !== null) removed.add(row.oldLine);
    }
  }
  return removed;
}
