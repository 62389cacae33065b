/**
 * View-model types and pure state transitions.
 *
 * UI state is a projection of service responses plus the user's selection;
 * no repair text is ever synthesized or reformatted on the client.
 */

export interface Fault {
  problemId: string;
  checkerId: string;
  file: string;
  function?: string;
  line: number;
  statement: string;
  shape: string;
  typeName: string;
  witness?: Record<string, number>;
  applied?: boolean;
}

export interface InsertionSpan {
  startLine: number | null;
  endLine: number | null;
}

export interface Candidate {
  problemId: string;
  patternId: string;
  rank: number;
  criteriaMatched: string[];
  renderedText: string;
  insertionSpan: InsertionSpan;
  valid: boolean | null;
  diff: string;
  originalText: string;
  repairedText: string;
  stale: boolean;
}

export type VerifyStatus =
  | "idle"
  | "pending"
  | "correct"
  | "faultPersists"
  | "newFaultIntroduced"
  | "error";

export interface VerifyState {
  status: VerifyStatus;
  jobId?: string;
  detail?: string;
}

export interface ViewState {
  runId: string | null;
  faults: Fault[];
  selected: string | null;
  candidates: Record<string, Candidate[]>;
  selectedPattern: Record<string, string>;
  verify: Record<string, VerifyState>;
  banner: string | null;
  loading: boolean;
}

export function initialState(): ViewState {
  return {
    runId: null,
    faults: [],
    selected: null,
    candidates: {},
    selectedPattern: {},
    verify: {},
    banner: null,
    loading: false,
  };
}

export function withRun(state: ViewState, runId: string, faults: Fault[]): ViewState {
  const stillThere = faults.some((f) => f.problemId === state.selected);
  return {
    ...state,
    runId,
    faults,
    selected: stillThere ? state.selected : null,
    banner: null,
  };
}

export function selectFault(state: ViewState, problemId: string): ViewState {
  return { ...state, selected: problemId };
}

export function withCandidates(
  state: ViewState, problemId: string, candidates: Candidate[],
): ViewState {
  const next = { ...state.candidates, [problemId]: candidates };
  const pattern = { ...state.selectedPattern };
  if (!(problemId in pattern) && candidates.length > 0) {
    pattern[problemId] = candidates[0].patternId;
  }
  return { ...state, candidates: next, selectedPattern: pattern };
}

export function selectPattern(
  state: ViewState, problemId: string, patternId: string,
): ViewState {
  return {
    ...state,
    selectedPattern: { ...state.selectedPattern, [problemId]: patternId },
  };
}

export function currentCandidate(state: ViewState): Candidate | null {
  if (!state.selected) return null;
  const pool = state.candidates[state.selected] ?? [];
  const wanted = state.selectedPattern[state.selected];
  return pool.find((c) => c.patternId === wanted) ?? pool[0] ?? null;
}

export function verifyStateFor(state: ViewState, problemId: string): VerifyState {
  return state.verify[problemId] ?? { status: "idle" };
}

/** Apply is possible only for validated, fresh candidates with no apply in flight. */
export function canApply(state: ViewState, candidate: Candidate | null): boolean {
  if (!candidate) return false;
  if (candidate.valid !== true || candidate.stale) return false;
  const verify = verifyStateFor(state, candidate.problemId);
  return verify.status === "idle" || verify.status === "error";
}

export function applyStarted(
  state: ViewState, problemId: string, jobId: string,
): ViewState {
  return {
    ...state,
    verify: { ...state.verify, [problemId]: { status: "pending", jobId } },
  };
}

export function verifySettled(
  state: ViewState, problemId: string, status: VerifyStatus, detail?: string,
): ViewState {
  const prev = state.verify[problemId];
  return {
    ...state,
    verify: {
      ...state.verify,
      [problemId]: { status, jobId: prev?.jobId, detail },
    },
  };
}

export function withBanner(state: ViewState, message: string | null): ViewState {
  return { ...state, banner: message };
}
