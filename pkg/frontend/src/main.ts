/** DOM wiring: state container, event delegation, verification polling. */

import { ApiError, ReviewApi, pollVerify } from "./api.js";
import {
  ViewState,
  applyStarted,
  initialState,
  selectFault,
  selectPattern,
  verifySettled,
  withBanner,
  withCandidates,
  withRun,
} from "./model.js";
import { renderApp } from "./render.js";

const api = new ReviewApi("");
let state: ViewState = initialState();

function setState(next: ViewState): void {
  state = next;
  const root = document.getElementById("app");
  if (root) root.innerHTML = renderApp(state);
}

async function refreshRun(): Promise<void> {
  try {
    const { runId } = await api.startRun();
    const faults = await api.getFaults(runId);
    setState(withRun(state, runId, faults));
    if (state.selected) await loadCandidates(state.selected);
  } catch (err) {
    setState(withBanner(state, describe(err)));
  }
}

async function loadCandidates(problemId: string): Promise<void> {
  try {
    const candidates = await api.getCandidates(problemId);
    setState(withCandidates(state, problemId, candidates));
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      setState(withBanner(state, "File changed on disk; reloading the view."));
      await refreshRun();
      return;
    }
    setState(withBanner(state, describe(err)));
  }
}

async function applyCandidate(problemId: string, patternId: string): Promise<void> {
  try {
    const { jobId } = await api.apply(problemId, patternId);
    setState(applyStarted(state, problemId, jobId));
    const reply = await pollVerify(api, jobId, { intervalMs: 1000 });
    setState(verifySettled(state, problemId,
      reply.status as never, reply.detail));
    await refreshRun();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      setState(withBanner(state, "File changed since this candidate was " +
        "rendered; re-running the analysis."));
      await refreshRun();
      return;
    }
    setState(verifySettled(state, problemId, "error", describe(err)));
    setState(withBanner(state, describe(err)));
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `service error ${err.status}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
}

document.addEventListener("click", (event) => {
  const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
  if (!target) return;
  const action = target.dataset.action;
  const problem = target.dataset.problem ?? "";
  if (action === "refresh") {
    void refreshRun();
  } else if (action === "select-fault") {
    setState(selectFault(state, problem));
    void loadCandidates(problem);
  } else if (action === "select-pattern") {
    setState(selectPattern(state, problem, target.dataset.pattern ?? ""));
  } else if (action === "apply") {
    if (!(target as HTMLButtonElement).disabled) {
      void applyCandidate(problem, target.dataset.pattern ?? "");
    }
  } else if (action === "dismiss-banner") {
    setState(withBanner(state, null));
  }
});

void refreshRun();
