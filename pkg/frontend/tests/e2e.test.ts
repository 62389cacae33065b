/**
 * Live end-to-end check against the real review service on a corpus copy:
 * fault listing, byte-identical candidate payloads, apply, verification
 * polling, and the fault disappearing on refresh.
 */

import { spawn, ChildProcess } from "node:child_process";
import { cpSync, mkdtempSync, readdirSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ReviewApi, pollVerify } from "../src/api.js";
import {
  initialState,
  selectFault,
  verifySettled,
  canApply,
  currentCandidate,
  withCandidates,
  withRun,
  applyStarted,
} from "../src/model.js";

const CORPUS = join(__dirname, "..", "..", "src", "overfix", "corpus");
const PORT = 8473;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let workdir: string;

async function waitForService(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      await fetch(BASE + "/verify/warmup");
      return; // any HTTP reply (even 404) means the server is up
    } catch {
      if (Date.now() > deadline) throw new Error("service never came up");
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "overfix-ui-e2e-"));
  const wanted = readdirSync(CORPUS)
    .filter((n) => n.endsWith(".c"))
    .slice(0, 2);
  expect(wanted.length).toBe(2);
  for (const name of wanted) {
    cpSync(join(CORPUS, name), join(workdir, name));
  }
  server = spawn("overfix",
    ["serve", "--root", workdir, "--bind", `127.0.0.1:${PORT}`],
    { stdio: "ignore" });
  await waitForService();
}, 60_000);

afterAll(() => {
  server?.kill();
  rmSync(workdir, { recursive: true, force: true });
});

describe("review loop against the live service", () => {
  const api = new ReviewApi(BASE);

  it("runs, applies, verifies, and refreshes", async () => {
    let state = initialState();

    const { runId } = await api.startRun();
    const faults = await api.getFaults(runId);
    state = withRun(state, runId, faults);
    expect(state.faults.length).toBe(2);
    for (const fault of state.faults) {
      expect(fault.problemId).toBeTruthy();
      expect(fault.line).toBeGreaterThan(0);
      expect(fault.shape).toBeTruthy();
    }

    const pid = state.faults[0].problemId;
    state = selectFault(state, pid);
    const candidates = await api.getCandidates(pid);
    state = withCandidates(state, pid, candidates);

    const top = currentCandidate(state);
    expect(top).not.toBeNull();
    expect(top!.rank).toBe(1);
    expect(top!.valid).toBe(true);

    // the model holds exactly the bytes the service sent
    const raw = await fetch(`${BASE}/faults/${encodeURIComponent(pid)}/candidates`)
      .then((r) => r.json()) as Array<Record<string, string>>;
    expect(top!.renderedText).toBe(raw[0].renderedText);
    expect(top!.diff).toBe(raw[0].diff);
    expect(top!.repairedText).toBe(raw[0].repairedText);
    expect(top!.repairedText).toContain(top!.renderedText);

    expect(canApply(state, top)).toBe(true);
    const { jobId } = await api.apply(pid, top!.patternId);
    state = applyStarted(state, pid, jobId);
    expect(canApply(state, top)).toBe(false);

    const reply = await pollVerify(api, jobId, { intervalMs: 500 });
    expect(reply.status).toBe("correct");
    expect(reply.newReports).toEqual([]);
    state = verifySettled(state, pid, "correct");

    // re-apply is refused by the service (stale file)
    await expect(api.apply(pid, top!.patternId)).rejects.toMatchObject({
      status: 409,
    });

    // a fresh run no longer lists the repaired fault
    const second = await api.startRun();
    const refreshed = await api.getFaults(second.runId);
    state = withRun(state, second.runId, refreshed);
    expect(refreshed.map((f) => f.problemId)).not.toContain(pid);
    expect(refreshed.length).toBe(1);
    expect(state.selected).toBeNull();
  }, 240_000);

  it("unknown ids surface as API errors", async () => {
    await expect(api.getFaults("run-none")).rejects.toMatchObject({ status: 404 });
    await expect(api.getCandidates("nope")).rejects.toMatchObject({ status: 404 });
    await expect(api.verifyStatus("nope")).rejects.toMatchObject({ status: 404 });
  });
});
