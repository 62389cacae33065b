import { describe, expect, it } from "vitest";

import { addedNewLines, parseUnifiedDiff, removedOldLines } from "../src/diff.js";

const SAMPLE = `--- a/mod.c
+++ b/mod.c
@@ -9,7 +9,12 @@
     int a = 0;
     b = rand();
     /* FAULT */
-    a = b * b;
+    if ((b > 0 && b >= sqrt(INT_MAX)) || (b < 0 && b < -sqrt(INT_MAX))) {
+        extern void log_or_die(const char *file, const char *fault_id, int line);
+        log_or_die("mod.c", "ID-Integer_Overflow_Fault", 12);
+    } else {
+        a = b * b;
+    }
     printf("%d", a);
     return 0;
 }
`;

describe("parseUnifiedDiff", () => {
  it("classifies rows and tracks line numbers", () => {
    const hunks = parseUnifiedDiff(SAMPLE);
    expect(hunks).toHaveLength(1);
    const rows = hunks[0].rows;
    expect(hunks[0].header).toBe("@@ -9,7 +9,12 @@");

    const del = rows.filter((r) => r.kind === "del");
    expect(del).toHaveLength(1);
    expect(del[0].text).toBe("    a = b * b;");
    expect(del[0].oldLine).toBe(12);

    const add = rows.filter((r) => r.kind === "add");
    expect(add).toHaveLength(6);
    expect(add[0].newLine).toBe(12);
    expect(add.at(-1)?.newLine).toBe(17);

    const ctx = rows.filter((r) => r.kind === "context");
    expect(ctx[0].oldLine).toBe(9);
    expect(ctx[0].newLine).toBe(9);
  });

  it("row text preserves the original bytes minus the marker", () => {
    const rows = parseUnifiedDiff(SAMPLE)[0].rows;
    const texts = rows.map((r) => r.text);
    expect(texts).toContain('        log_or_die("mod.c", "ID-Integer_Overflow_Fault", 12);');
  });

  it("computes added and removed line sets", () => {
    expect([...addedNewLines(SAMPLE)].sort((a, b) => a - b))
      .toEqual([12, 13, 14, 15, 16, 17]);
    expect([...removedOldLines(SAMPLE)]).toEqual([12]);
  });

  it("tolerates empty diffs", () => {
    expect(parseUnifiedDiff("")).toEqual([]);
    expect(addedNewLines("").size).toBe(0);
  });
});
