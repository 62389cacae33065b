"""HTTP facade for the human repair-review loop.

Exposes analysis runs, fault reports, ranked repair candidates with diffs and
full file views, apply, and asynchronous re-verification.  Single-user,
localhost-bound, JSON over HTTP/1.1; files are mutated only through apply, and
every apply lands in an append-only audit log before verification begins.
"""

from __future__ import annotations

import json
import mimetypes
import os
import re
import threading
import time
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .config import AnalysisConfig
from .frontend import parse, resolve_types
from .frontend.errors import FrontendError
from .harness import corpus_files
from .repair import RepairCandidate, confirm_correct_repair, generate_candidates
from .rewriter import StaleFile, apply_repair, unified_diff
from .symex import Analyzer


@dataclass
class FaultEntry:
    report: object
    unit: object
    path: str
    run_id: str


@dataclass
class VerifyJob:
    job_id: str
    problem_id: str
    status: str = "pending"
    new_reports: list[dict] = field(default_factory=list)
    detail: str = ""


class ReviewSession:
    """All mutable review state, guarded by one lock."""

    def __init__(self, root: str, config: AnalysisConfig | None = None):
        self.root = os.path.abspath(root)
        self.config = config or AnalysisConfig()
        self.lock = threading.RLock()
        self.runs: dict[str, list[str]] = {}          # run id -> problem ids
        self.faults: dict[str, FaultEntry] = {}
        self.candidates: dict[str, list[RepairCandidate]] = {}
        self.jobs: dict[str, VerifyJob] = {}
        self.applied: dict[str, str] = {}             # problem id -> job id
        self._run_counter = 0
        self.log_path = os.path.join(self.root, ".overfix-applied.jsonl")

    # -- operations -------------------------------------------------------
    def start_run(self, root: str | None = None) -> str:
        target = os.path.abspath(root) if root else self.root
        with self.lock:
            self._run_counter += 1
            run_id = f"run-{self._run_counter}"
        problem_ids: list[str] = []
        for path in corpus_files(target):
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
            try:
                unit = resolve_types(parse(path, text))
            except FrontendError:
                continue
            result = Analyzer(unit, self.config).run()
            for report in result.reports:
                entry = FaultEntry(report, unit, path, run_id)
                with self.lock:
                    self.faults[report.problem_id] = entry
                    self.candidates.pop(report.problem_id, None)
                problem_ids.append(report.problem_id)
        with self.lock:
            self.runs[run_id] = problem_ids
        return run_id

    def faults_for(self, run_id: str) -> list[dict] | None:
        with self.lock:
            if run_id not in self.runs:
                return None
            ids = self.runs[run_id]
            out = []
            for pid in ids:
                entry = self.faults.get(pid)
                if entry is None:
                    continue
                doc = entry.report.to_json()
                doc["function"] = entry.report.function
                doc["applied"] = pid in self.applied
                out.append(doc)
            return out

    def candidates_for(self, problem_id: str) -> list[dict] | None:
        with self.lock:
            entry = self.faults.get(problem_id)
        if entry is None:
            return None
        with self.lock:
            cached = self.candidates.get(problem_id)
        if cached is None:
            cached = generate_candidates(entry.unit, entry.report, self.config)
            with self.lock:
                self.candidates[problem_id] = cached
        with open(entry.path, "r", encoding="utf-8") as fh:
            current = fh.read()
        docs = []
        for cand in cached:
            doc = cand.to_json(entry.unit)
            try:
                applied = apply_repair(entry.path, current, cand, write=False)
                doc["diff"] = applied.diff
                doc["originalText"] = current
                doc["repairedText"] = applied.new_text
                doc["stale"] = False
            except StaleFile:
                doc["diff"] = ""
                doc["originalText"] = current
                doc["repairedText"] = ""
                doc["stale"] = True
            docs.append(doc)
        return docs

    def apply_candidate(self, problem_id: str, pattern_id: str | None) -> tuple[int, dict]:
        with self.lock:
            entry = self.faults.get(problem_id)
            if entry is None:
                return 404, {"error": f"unknown problem id {problem_id!r}"}
            cached = self.candidates.get(problem_id)
        if cached is None:
            cached = generate_candidates(entry.unit, entry.report, self.config)
            with self.lock:
                self.candidates[problem_id] = cached
        pool = [c for c in cached if pattern_id is None or c.pattern_id == pattern_id]
        if not pool:
            return 404, {"error": f"no candidate with pattern {pattern_id!r}"}
        candidate = pool[0]
        if not candidate.valid:
            return 422, {"error": "candidate failed validation and cannot be applied",
                         "details": candidate.valid_details}
        # file mutation is serialized: concurrent applies must observe each
        # other's writes so the checksum guard can refuse the loser
        with self.lock:
            with open(entry.path, "r", encoding="utf-8") as fh:
                text = fh.read()
            try:
                applied = apply_repair(entry.path, text, candidate, write=True)
            except StaleFile as exc:
                return 409, {"error": str(exc)}
            job = VerifyJob(job_id=uuid.uuid4().hex[:12], problem_id=problem_id)
            self.jobs[job.job_id] = job
            self.applied[problem_id] = job.job_id
        self._log({"event": "apply", "problemId": problem_id,
                   "patternId": candidate.pattern_id, "file": entry.path,
                   "timestamp": time.time(), "jobId": job.job_id})
        worker = threading.Thread(
            target=self._verify, args=(job, entry, candidate, applied.new_text),
            daemon=True)
        worker.start()
        return 202, {"jobId": job.job_id}

    def _verify(self, job: VerifyJob, entry: FaultEntry,
                candidate: RepairCandidate, new_text: str) -> None:
        try:
            outcome = confirm_correct_repair(
                entry.path, new_text, entry.report, candidate, self.config)
            status = outcome.verdict
            new_reports = [r.to_json() for r in outcome.post_reports]
            detail = outcome.detail
        except Exception as exc:  # noqa: BLE001 - job must always settle
            status, new_reports, detail = "error", [], str(exc)
        with self.lock:
            job.status = status
            job.new_reports = new_reports
            job.detail = detail
        self._log({"event": "verify", "jobId": job.job_id,
                   "problemId": job.problem_id, "outcome": status,
                   "timestamp": time.time()})

    def job_status(self, job_id: str) -> dict | None:
        with self.lock:
            job = self.jobs.get(job_id)
            if job is None:
                return None
            doc = {"status": job.status}
            if job.status not in ("pending",):
                doc["newReports"] = job.new_reports
                if job.detail:
                    doc["detail"] = job.detail
            return doc

    def _log(self, record: dict) -> None:
        with self.lock:
            with open(self.log_path, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")


# ---------------------------------------------------------------------------
# HTTP layer

_ROUTES = [
    ("POST", re.compile(r"^/runs$"), "post_runs"),
    ("GET", re.compile(r"^/runs/([^/]+)/faults$"), "get_faults"),
    ("GET", re.compile(r"^/faults/([^/]+)/candidates$"), "get_candidates"),
    ("POST", re.compile(r"^/faults/([^/]+)/apply$"), "post_apply"),
    ("GET", re.compile(r"^/verify/([^/]+)$"), "get_verify"),
]


class _Handler(BaseHTTPRequestHandler):
    session: ReviewSession = None  # set by serve()
    ui_dir: str | None = None

    # -- plumbing -----------------------------------------------------------
    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, status: int, doc) -> None:
        body = json.dumps(doc).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if not length:
            return {}
        try:
            return json.loads(self.rfile.read(length).decode("utf-8"))
        except json.JSONDecodeError:
            return {}

    def _dispatch(self, method: str) -> None:
        from urllib.parse import unquote

        path = self.path.split("?", 1)[0]
        for verb, pattern, name in _ROUTES:
            if verb != method:
                continue
            m = pattern.match(path)
            if m:
                getattr(self, name)(*(unquote(g) for g in m.groups()))
                return
        if method == "GET" and self._serve_static(path):
            return
        self._send_json(404, {"error": f"no route for {method} {path}"})

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    # -- endpoints ----------------------------------------------------------
    def post_runs(self):
        body = self._read_body()
        run_id = self.session.start_run(body.get("root"))
        self._send_json(201, {"runId": run_id})

    def get_faults(self, run_id: str):
        faults = self.session.faults_for(run_id)
        if faults is None:
            self._send_json(404, {"error": f"unknown run {run_id!r}"})
            return
        self._send_json(200, faults)

    def get_candidates(self, problem_id: str):
        docs = self.session.candidates_for(problem_id)
        if docs is None:
            self._send_json(404, {"error": f"unknown problem id {problem_id!r}"})
            return
        self._send_json(200, docs)

    def post_apply(self, problem_id: str):
        body = self._read_body()
        status, doc = self.session.apply_candidate(problem_id, body.get("patternId"))
        self._send_json(status, doc)

    def get_verify(self, job_id: str):
        doc = self.session.job_status(job_id)
        if doc is None:
            self._send_json(404, {"error": f"unknown job {job_id!r}"})
            return
        self._send_json(200, doc)

    # -- static UI ----------------------------------------------------------
    def _serve_static(self, path: str) -> bool:
        if self.ui_dir is None or not os.path.isdir(self.ui_dir):
            return False
        rel = "index.html" if path in ("/", "") else path.lstrip("/")
        full = os.path.realpath(os.path.join(self.ui_dir, rel))
        if not full.startswith(os.path.realpath(self.ui_dir) + os.sep) \
                and full != os.path.realpath(self.ui_dir):
            return False
        if not os.path.isfile(full):
            return False
        ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
        with open(full, "rb") as fh:
            body = fh.read()
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)
        return True


def make_server(root: str, host: str, port: int,
                config: AnalysisConfig | None = None,
                ui_dir: str | None = None) -> tuple[ThreadingHTTPServer, ReviewSession]:
    session = ReviewSession(root, config)
    handler = type("BoundHandler", (_Handler,),
                   {"session": session, "ui_dir": ui_dir})
    server = ThreadingHTTPServer((host, port), handler)
    return server, session


def serve(root: str, host: str, port: int, config: AnalysisConfig | None = None,
          ui_dir: str | None = None) -> None:
    server, _ = make_server(root, host, port, config, ui_dir)
    print(f"overfix review service on http://{host}:{port} (root {root})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
