/**
 * Pure HTML-string renderers.
 *
 * Everything displayed comes verbatim from service responses: file views and
 * rendered repair text are HTML-escaped but never re-wrapped, re-indented, or
 * otherwise reformatted.
 */

import { addedNewLines, parseUnifiedDiff, removedOldLines } from "./diff.js";
import {
  Candidate,
  ViewState,
  canApply,
  currentCandidate,
  verifyStateFor,
} from "./model.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const CHIP_LABEL: Record<string, string> = {
  idle: "",
  pending: "verifying…",
  correct: "correct",
  faultPersists: "fault persists",
  newFaultIntroduced: "new fault introduced",
  error: "verification error",
};

export function renderStatusChip(status: string): string {
  const label = CHIP_LABEL[status] ?? status;
  if (!label) return "";
  return `<span class="chip chip-${escapeHtml(status)}">${escapeHtml(label)}</span>`;
}

export function renderFaultList(state: ViewState): string {
  if (state.faults.length === 0) {
    return `<div class="empty">No faults reported. Run the analysis or enjoy the silence.</div>`;
  }
  const rows = state.faults.map((fault) => {
    const active = fault.problemId === state.selected ? " active" : "";
    const verify = verifyStateFor(state, fault.problemId);
    return `
<li class="fault-row${active}" data-action="select-fault" data-problem="${escapeHtml(fault.problemId)}">
  <span class="loc">${escapeHtml(fault.file)}:${fault.line}</span>
  <span class="shape">${escapeHtml(fault.shape)}</span>
  <span class="type">${escapeHtml(fault.typeName)}</span>
  ${renderStatusChip(verify.status)}
  <code class="stmt">${escapeHtml(fault.statement)}</code>
</li>`;
  });
  return `<ul class="fault-list">${rows.join("")}</ul>`;
}

export function renderCandidateTabs(state: ViewState): string {
  if (!state.selected) return "";
  const pool = state.candidates[state.selected] ?? [];
  if (pool.length === 0) {
    return `<div class="empty">No repair candidates for this fault.</div>`;
  }
  const active = currentCandidate(state);
  const tabs = pool.map((cand) => {
    const cls = cand === active ? "tab active" : "tab";
    const badge = cand.valid === true ? "" : ` <span class="invalid">invalid</span>`;
    return `<button class="${cls}" data-action="select-pattern" ` +
      `data-problem="${escapeHtml(cand.problemId)}" ` +
      `data-pattern="${escapeHtml(cand.patternId)}">` +
      `#${cand.rank} ${escapeHtml(cand.patternId)}${badge}</button>`;
  });
  return `<div class="tabs">${tabs.join("")}</div>`;
}

export function renderCriteria(candidate: Candidate): string {
  const items = candidate.criteriaMatched
    .map((c) => `<span class="criterion">${escapeHtml(c)}</span>`)
    .join(" ");
  return `<div class="criteria">matched criteria: ${items}</div>`;
}

function renderFileColumn(text: string, marked: Set<number>,
                          title: string, cls: string): string {
  const rows = text.split("\n").map((line, idx) => {
    const no = idx + 1;
    const mark = marked.has(no) ? ` class="hl-${cls}"` : "";
    return `<tr${mark}><td class="no">${no}</td>` +
      `<td class="code">${escapeHtml(line)}</td></tr>`;
  });
  return `
<div class="file-view">
  <h3>${escapeHtml(title)}</h3>
  <table class="code-table">${rows.join("")}</table>
</div>`;
}

/** Original and repaired files side by side; added lines highlighted. */
export function renderSideBySide(candidate: Candidate): string {
  const added = addedNewLines(candidate.diff);
  const removed = removedOldLines(candidate.diff);
  return `
<div class="side-by-side">
  ${renderFileColumn(candidate.originalText, removed, "original", "del")}
  ${renderFileColumn(candidate.repairedText, added, "repaired", "add")}
</div>`;
}

export function renderDiff(candidate: Candidate): string {
  const hunks = parseUnifiedDiff(candidate.diff);
  const rows = hunks.flatMap((hunk) => [
    `<tr class="hunk"><td colspan="3">${escapeHtml(hunk.header)}</td></tr>`,
    ...hunk.rows.map((row) => {
      const cls = row.kind === "add" ? "add" : row.kind === "del" ? "del" : "ctx";
      const a = row.oldLine ?? "";
      const b = row.newLine ?? "";
      return `<tr class="${cls}"><td class="no">${a}</td>` +
        `<td class="no">${b}</td><td class="code">${escapeHtml(row.text)}</td></tr>`;
    }),
  ]);
  return `<table class="diff-table">${rows.join("")}</table>`;
}

export function renderApplyControls(state: ViewState): string {
  const candidate = currentCandidate(state);
  if (!candidate) return "";
  const verify = verifyStateFor(state, candidate.problemId);
  if (verify.status !== "idle" && verify.status !== "error") {
    // applied: the button goes away for good; only the status remains
    const detail = verify.detail
      ? `<div class="verify-detail">${escapeHtml(verify.detail)}</div>` : "";
    return `<div class="apply-area">${renderStatusChip(verify.status)}${detail}</div>`;
  }
  const disabled = canApply(state, candidate) ? "" : " disabled";
  const hint = candidate.valid === true ? ""
    : `<span class="hint">candidate failed validation and cannot be applied</span>`;
  return `
<div class="apply-area">
  <button class="apply"${disabled} data-action="apply" ` +
    `data-problem="${escapeHtml(candidate.problemId)}" ` +
    `data-pattern="${escapeHtml(candidate.patternId)}">Apply repair</button>
  ${hint}
</div>`;
}

export function renderBanner(state: ViewState): string {
  if (!state.banner) return "";
  return `
<div class="banner" data-action="dismiss-banner">
  ${escapeHtml(state.banner)} <span class="dismiss">dismiss</span>
</div>`;
}

export function renderApp(state: ViewState): string {
  const candidate = currentCandidate(state);
  const detailPane = candidate
    ? `
${renderCandidateTabs(state)}
${renderCriteria(candidate)}
${renderApplyControls(state)}
<h2>Unified diff</h2>
${renderDiff(candidate)}
<h2>Side by side</h2>
${renderSideBySide(candidate)}`
    : state.selected
      ? `<div class="empty">Loading candidates…</div>`
      : `<div class="empty">Select a fault to inspect repair candidates.</div>`;
  return `
${renderBanner(state)}
<header>
  <h1>overfix review</h1>
  <button data-action="refresh">Re-run analysis</button>
  <span class="run-id">${escapeHtml(state.runId ?? "")}</span>
</header>
<main>
  <section class="pane faults">${renderFaultList(state)}</section>
  <section class="pane detail">${detailPane}</section>
</main>`;
}
