/** Thin typed wrappers over the review-service endpoints. */

import type { Candidate, Fault } from "./model.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(base: string, method: string, path: string,
                          body?: unknown): Promise<T> {
  const resp = await fetch(base + path, {
    method,
    headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
    body: body !== undefined ? JSON.stringify(body) : undefined,
  });
  const doc = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const message = (doc as { error?: string }).error ?? `HTTP ${resp.status}`;
    throw new ApiError(resp.status, message);
  }
  return doc as T;
}

export interface VerifyReply {
  status: string;
  newReports?: unknown[];
  detail?: string;
}

export class ReviewApi {
  constructor(readonly base: string) {}

  startRun(root?: string): Promise<{ runId: string }> {
    return request(this.base, "POST", "/runs", root ? { root } : {});
  }

  getFaults(runId: string): Promise<Fault[]> {
    return request(this.base, "GET", `/runs/${encodeURIComponent(runId)}/faults`);
  }

  getCandidates(problemId: string): Promise<Candidate[]> {
    return request(this.base, "GET",
      `/faults/${encodeURIComponent(problemId)}/candidates`);
  }

  apply(problemId: string, patternId: string): Promise<{ jobId: string }> {
    return request(this.base, "POST",
      `/faults/${encodeURIComponent(problemId)}/apply`, { patternId });
  }

  verifyStatus(jobId: string): Promise<VerifyReply> {
    return request(this.base, "GET", `/verify/${encodeURIComponent(jobId)}`);
  }
}

/** Poll a verification job once per second until it leaves "pending". */
export async function pollVerify(
  api: ReviewApi, jobId: string,
  opts: { intervalMs?: number; timeoutMs?: number } = {},
): Promise<VerifyReply> {
  const interval = opts.intervalMs ?? 1000;
  const deadline = Date.now() + (opts.timeoutMs ?? 300_000);
  for (;;) {
    const reply = await api.verifyStatus(jobId);
    if (reply.status !== "pending") return reply;
    if (Date.now() > deadline) throw new ApiError(504, "verification timed out");
    await new Promise((resolve) => setTimeout(resolve, interval));
  }
}
