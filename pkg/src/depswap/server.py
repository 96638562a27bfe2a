"""HTTP JSON backend for the annotation UI.

Serves tasks one at a time, persists every accepted annotation to an
append-only JSONL file (flushed and fsynced before the 200 goes out), and
reports live precision/recall/Likert over whatever has been submitted.
Desk-scale by design: one process, one writer lock, no database.

Endpoints:
    GET  /api/tasks/next?annotator=ID   next unannotated task (or done flag)
    POST /api/annotations               accept one AnnotationRecord
    GET  /api/report                    live ValidationReport
    GET  /api/progress                  counts per annotator
"""
from __future__ import annotations

import json
import os
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .swap import Span, SwapRecord
from .validation import AnnotationRecord, score


def _task_silver_records(task: dict) -> list[SwapRecord]:
    records = []
    for item in task.get("silver", []):
        head = item["head"]
        deps = item["deps"]
        records.append(
            SwapRecord(
                pair_type=task.get("pair_type", ""),
                head_span=Span(list(head), head[0] if head else 0),
                dep_spans=[Span(list(d), d[0] if d else 0) for d in deps],
            )
        )
    return records


class AnnotationStore:
    """Task list plus append-only annotation log; restart-safe."""

    def __init__(self, tasks_path: str | Path, state_path: str | Path):
        self.tasks: list[dict] = []
        with open(tasks_path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    self.tasks.append(json.loads(line))
        self.by_sent = {t["sent_id"]: t for t in self.tasks}
        self.state_path = Path(state_path)
        self.annotations: dict[tuple[str, str], AnnotationRecord] = {}
        self._annotated: set[str] = set()
        self._leases: dict[str, str] = {}  # annotator -> sent_id
        self._lock = threading.Lock()
        if self.state_path.exists():
            with open(self.state_path, encoding="utf-8") as fh:
                for line in fh:
                    if line.strip():
                        self._remember(AnnotationRecord.from_json(line))
        self._log = open(self.state_path, "a", encoding="utf-8")

    def _remember(self, ann: AnnotationRecord) -> None:
        self.annotations[(ann.sent_id, ann.annotator_id)] = ann
        self._annotated.add(ann.sent_id)

    def close(self) -> None:
        self._log.close()

    def next_task(self, annotator: str) -> dict | None:
        with self._lock:
            held = self._leases.get(annotator)
            if held and held not in self._annotated:
                return self.by_sent[held]
            taken = {
                sid for who, sid in self._leases.items() if who != annotator
            }
            for task in self.tasks:
                sid = task["sent_id"]
                if sid in self._annotated or sid in taken:
                    continue
                self._leases[annotator] = sid
                return task
            return None

    def submit(self, ann: AnnotationRecord) -> None:
        """Append durably, then acknowledge.  Raises KeyError for unknown
        sentences, ValueError for gold pairs naming unknown tokens, and
        FileExistsError for duplicate (sentence, annotator)."""
        with self._lock:
            task = self.by_sent.get(ann.sent_id)
            if task is None:
                raise KeyError(ann.sent_id)
            token_ids = {t["id"] for t in task.get("tokens", [])}
            for head, dep in ann.gold_pairs:
                if not head or not dep or not (set(head) | set(dep)) <= token_ids:
                    raise ValueError(
                        f"gold pair references tokens outside {ann.sent_id}"
                    )
            if (ann.sent_id, ann.annotator_id) in self.annotations:
                raise FileExistsError(f"{ann.sent_id}/{ann.annotator_id}")
            self._log.write(ann.to_json() + "\n")
            self._log.flush()
            os.fsync(self._log.fileno())
            self._remember(ann)
            if self._leases.get(ann.annotator_id) == ann.sent_id:
                del self._leases[ann.annotator_id]

    def report(self) -> dict:
        with self._lock:
            silver = {
                t["sent_id"]: _task_silver_records(t) for t in self.tasks
            }
            anns = list(self.annotations.values())
        pair_type = self.tasks[0].get("pair_type", "") if self.tasks else ""
        rep = score(silver, anns, pair_type=pair_type, known_sent_ids=set(silver))
        return rep.summary()

    def progress(self) -> dict:
        with self._lock:
            per_annotator: dict[str, int] = {}
            for sid, who in self.annotations:
                per_annotator[who] = per_annotator.get(who, 0) + 1
            return {
                "total": len(self.tasks),
                "annotated": len(self._annotated),
                "remaining": len(self.tasks) - len(self._annotated),
                "per_annotator": per_annotator,
            }


class _Handler(BaseHTTPRequestHandler):
    store: AnnotationStore  # set by the server

    def log_message(self, fmt, *args):  # quiet
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self._send(200, {})

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/tasks/next":
            annotator = parse_qs(url.query).get("annotator", ["anon"])[0]
            task = self.store.next_task(annotator)
            if task is None:
                self._send(200, {"task": None, "done": True})
            else:
                self._send(200, {"task": task, "done": False})
        elif url.path == "/api/report":
            self._send(200, self.store.report())
        elif url.path == "/api/progress":
            self._send(200, self.store.progress())
        else:
            self._send(404, {"error": "not found"})

    def do_POST(self):
        url = urlparse(self.path)
        if url.path != "/api/annotations":
            self._send(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            data = json.loads(self.rfile.read(length).decode("utf-8"))
            if "timestamp" not in data:
                data["timestamp"] = time.time()
            ann = AnnotationRecord.from_json(json.dumps(data))
        except (ValueError, KeyError) as exc:
            self._send(400, {"error": f"malformed annotation: {exc}"})
            return
        try:
            self.store.submit(ann)
        except KeyError:
            self._send(400, {"error": f"unknown sentence {ann.sent_id}"})
            return
        except ValueError as exc:
            self._send(400, {"error": str(exc)})
            return
        except FileExistsError as exc:
            self._send(409, {"error": f"duplicate annotation {exc}"})
            return
        self._send(200, {"ok": True})


class AnnotationServer:
    def __init__(
        self,
        tasks_path: str | Path,
        state_path: str | Path,
        host: str = "127.0.0.1",
        port: int = 8765,
    ):
        self.store = AnnotationStore(tasks_path, state_path)
        handler = type("BoundHandler", (_Handler,), {"store": self.store})
        self._httpd = ThreadingHTTPServer((host, port), handler)
        self.host, self.port = self._httpd.server_address[:2]
        self._thread: threading.Thread | None = None

    def start(self) -> None:
        self._thread = threading.Thread(target=self._httpd.serve_forever, daemon=True)
        self._thread.start()

    def wait(self) -> None:
        if self._thread:
            self._thread.join()

    def stop(self) -> None:
        self._httpd.shutdown()
        self._httpd.server_close()
        self.store.close()
