import { describe, expect, it } from "vitest";

import {
  Candidate,
  Fault,
  applyStarted,
  initialState,
  selectFault,
  verifySettled,
  withCandidates,
  withRun,
} from "../src/model.js";
import {
  escapeHtml,
  renderApp,
  renderApplyControls,
  renderFaultList,
  renderSideBySide,
  renderStatusChip,
} from "../src/render.js";

const ORIGINAL = 'int main(void)\n{\n    int a = 0;\n    a = b * b;\n    return a;\n}\n';
const REPAIRED = ORIGINAL.replace(
  "    a = b * b;",
  '    if (guard) {\n        log_or_die("x.c", "ID", 4);\n    } else {\n        a = b * b;\n    }',
);

function fault(): Fault {
  return {
    problemId: "x.c:4:overflow",
    checkerId: "ID-Integer_Overflow_Fault",
    file: "x.c",
    line: 4,
    statement: "a = b * b;",
    shape: "MulEqual",
    typeName: "int",
  };
}

function candidate(valid: boolean | null = true): Candidate {
  return {
    problemId: "x.c:4:overflow",
    patternId: "mul-equal-guard",
    rank: 1,
    criteriaMatched: ["C2", "C14"],
    renderedText: 'if (guard) <b>&amp;</b>',
    insertionSpan: { startLine: 4, endLine: 4 },
    valid,
    diff: "--- a/x.c\n+++ b/x.c\n@@ -4,1 +4,5 @@\n-    a = b * b;\n+    if (guard) {\n+        log\n+    } else {\n+        a = b * b;\n+    }\n",
    originalText: ORIGINAL,
    repairedText: REPAIRED,
    stale: false,
  };
}

function unescapeHtml(text: string): string {
  return text
    .replace(/&quot;/g, '"')
    .replace(/&lt;/g, "<")
    .replace(/&gt;/g, ">")
    .replace(/&amp;/g, "&");
}

describe("renderers", () => {
  it("fault rows carry location, shape, type, and the raw statement", () => {
    const state = withRun(initialState(), "run-1", [fault()]);
    const html = renderFaultList(state);
    expect(html).toContain("x.c:4");
    expect(html).toContain("MulEqual");
    expect(html).toContain("int");
    expect(html).toContain("a = b * b;");
  });

  it("empty run renders the empty-state panel", () => {
    const html = renderFaultList(withRun(initialState(), "run-1", []));
    expect(html).toContain("No faults reported");
  });

  it("side-by-side view reproduces both file texts byte for byte", () => {
    const html = renderSideBySide(candidate());
    const cells = [...html.matchAll(/<td class="code">(.*?)<\/td>/gs)]
      .map((m) => unescapeHtml(m[1]));
    const originalLines = ORIGINAL.split("\n");
    const repairedLines = REPAIRED.split("\n");
    expect(cells.slice(0, originalLines.length)).toEqual(originalLines);
    expect(cells.slice(originalLines.length)).toEqual(repairedLines);
  });

  it("highlights exactly the added lines in the repaired view", () => {
    const html = renderSideBySide(candidate());
    const marks = [...html.matchAll(/<tr class="hl-add"><td class="no">(\d+)<\/td>/g)]
      .map((m) => Number(m[1]));
    expect(marks).toEqual([4, 5, 6, 7, 8]);
  });

  it("apply button is disabled for invalid candidates", () => {
    let state = withRun(initialState(), "run-1", [fault()]);
    state = selectFault(state, "x.c:4:overflow");
    state = withCandidates(state, "x.c:4:overflow", [candidate(false)]);
    const html = renderApplyControls(state);
    expect(html).toContain("disabled");
    expect(html).toContain("cannot be applied");
  });

  it("apply button disappears after the verdict settles", () => {
    let state = withRun(initialState(), "run-1", [fault()]);
    state = selectFault(state, "x.c:4:overflow");
    state = withCandidates(state, "x.c:4:overflow", [candidate(true)]);
    state = applyStarted(state, "x.c:4:overflow", "job-9");
    let html = renderApplyControls(state);
    expect(html).not.toContain("data-action=\"apply\"");
    expect(html).toContain("verifying");
    state = verifySettled(state, "x.c:4:overflow", "correct");
    html = renderApplyControls(state);
    expect(html).not.toContain("data-action=\"apply\"");
    expect(html).toContain("correct");
  });

  it("status chips cover the verification lifecycle", () => {
    expect(renderStatusChip("pending")).toContain("verifying");
    expect(renderStatusChip("correct")).toContain("correct");
    expect(renderStatusChip("faultPersists")).toContain("fault persists");
    expect(renderStatusChip("idle")).toBe("");
  });

  it("escapes markup in service data", () => {
    expect(escapeHtml("<script>alert(1)</script>"))
      .toBe("&lt;script&gt;alert(1)&lt;/script&gt;");
    const state = withCandidates(
      selectFault(withRun(initialState(), "r", [fault()]), "x.c:4:overflow"),
      "x.c:4:overflow", [candidate()]);
    const html = renderApp(state);
    expect(html).not.toContain("<b>&amp;</b>");
  });
});
