"""Local JSON-over-HTTP companion service for the mutation explorer.

Endpoints (all JSON bodies):

* ``POST /session``                  create a session from a quiver
* ``GET  /session/{id}``             current state and history
* ``POST /session/{id}/mutate``      ``{"vertex": v, "power": t}`` (1-based)
* ``POST /session/{id}/undo``        inverse power m + 1 - t of the last step
* ``GET  /session/{id}/classify``    membership verdict
* ``GET  /session/{id}/zero-part``   colour-0 subquiver (members only, else 409)
* ``GET  /class?n=&m=``              enumerated class representatives

Sessions live in memory; each session serializes its own mutations.  The
server binds loopback by default: it is a local companion, not a
deployment target.
"""
from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .core import ColouredQuiver, QuiverError, linear_quiver, quiver_from_json, quiver_to_json, validate
from .classify import is_member
from .mutation import MutationStep, mutate_power
from .enumeration import ClassLimitExceeded, mutation_class
from .analysis import zero_part


@dataclass
class Session:
    id: str
    initial: ColouredQuiver
    current: ColouredQuiver
    history: list[tuple[ColouredQuiver, MutationStep]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def state_json(self) -> dict:
        return {
            "id": self.id,
            "m": self.current.m,
            "n": self.current.n,
            "quiver": quiver_to_json(self.current),
            "history": [step.to_json() for _, step in self.history],
        }


class ServiceState:
    def __init__(self):
        self.sessions: dict[str, Session] = {}
        self.sessions_lock = threading.Lock()
        self.class_cache: dict[tuple[int, int], list[dict]] = {}
        self.class_lock = threading.Lock()

    def create_session(self, quiver: ColouredQuiver) -> Session:
        sid = uuid.uuid4().hex
        session = Session(id=sid, initial=quiver, current=quiver)
        with self.sessions_lock:
            self.sessions[sid] = session
        return session

    def get(self, sid: str) -> Session | None:
        with self.sessions_lock:
            return self.sessions.get(sid)

    def class_representatives(self, n: int, m: int) -> list[dict]:
        with self.class_lock:
            cached = self.class_cache.get((n, m))
            if cached is None:
                cls = mutation_class(linear_quiver(n, m))
                cached = [quiver_to_json(q) for q in cls.representatives.values()]
                self.class_cache[(n, m)] = cached
            return cached


class _ApiError(Exception):
    def __init__(self, status: int, payload: dict):
        self.status = status
        self.payload = payload


class Handler(BaseHTTPRequestHandler):
    state: ServiceState  # set by make_server

    def log_message(self, fmt, *args):  # quiet by default
        pass

    # -- plumbing ---------------------------------------------------------

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            obj = json.loads(raw or b"{}")
        except json.JSONDecodeError as exc:
            raise _ApiError(400, {"error": f"invalid JSON body: {exc}"})
        if not isinstance(obj, dict):
            raise _ApiError(400, {"error": "JSON body must be an object"})
        return obj

    def _session_or_404(self, sid: str) -> Session:
        session = self.state.get(sid)
        if session is None:
            raise _ApiError(404, {"error": f"unknown session {sid}"})
        return session

    # -- routes -----------------------------------------------------------

    def do_OPTIONS(self):  # CORS preflight for the browser client
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        try:
            self._route("GET")
        except _ApiError as exc:
            self._send(exc.status, exc.payload)

    def do_POST(self):
        try:
            self._route("POST")
        except _ApiError as exc:
            self._send(exc.status, exc.payload)

    def _route(self, method: str) -> None:
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        if method == "GET" and parts == ["class"]:
            return self._handle_class(parse_qs(url.query))
        if parts and parts[0] == "session":
            if method == "POST" and len(parts) == 1:
                return self._handle_create()
            if len(parts) >= 2:
                session = self._session_or_404(parts[1])
                rest = parts[2:]
                if method == "GET" and rest == []:
                    return self._send(200, session.state_json())
                if method == "POST" and rest == ["mutate"]:
                    return self._handle_mutate(session)
                if method == "POST" and rest == ["undo"]:
                    return self._handle_undo(session)
                if method == "GET" and rest == ["classify"]:
                    return self._send(200, is_member(session.current).to_json())
                if method == "GET" and rest == ["zero-part"]:
                    return self._handle_zero_part(session)
        raise _ApiError(404, {"error": f"no route for {method} {url.path}"})

    def _handle_create(self) -> None:
        body = self._read_json()
        try:
            quiver = quiver_from_json(body)
        except QuiverError as exc:
            raise _ApiError(400, {"error": str(exc)})
        report = validate(quiver)
        if not report.ok:
            raise _ApiError(400, {"error": "invalid quiver", "problems": report.to_json()})
        session = self.state.create_session(quiver)
        self._send(201, session.state_json())

    def _handle_mutate(self, session: Session) -> None:
        body = self._read_json()
        try:
            vertex = int(body["vertex"]) - 1
            power = int(body.get("power", 1))
        except (KeyError, TypeError, ValueError):
            raise _ApiError(400, {"error": "body must carry integer 'vertex' and 'power'"})
        if not (0 <= vertex < session.current.n):
            raise _ApiError(400, {"error": f"vertex {vertex + 1} out of range"})
        if not (1 <= power <= session.current.m + 1):
            raise _ApiError(400, {"error": f"power must lie in [1, {session.current.m + 1}]"})
        with session.lock:
            before = session.current
            session.current = mutate_power(before, vertex, power)
            session.history.append((before, MutationStep(vertex, power)))
            self._send(200, session.state_json())

    def _handle_undo(self, session: Session) -> None:
        with session.lock:
            if not session.history:
                raise _ApiError(400, {"error": "nothing to undo"})
            before, step = session.history[-1]
            m = session.current.m
            if is_member(session.current).member:
                # mu^(m+1) = Id on members, so the inverse power suffices
                undone = mutate_power(session.current, step.vertex, m + 1 - step.power)
                if undone != before:  # outside-class edge case: fall back
                    undone = before
            else:
                undone = before
            session.history.pop()
            session.current = undone
            self._send(200, session.state_json())

    def _handle_zero_part(self, session: Session) -> None:
        verdict = is_member(session.current)
        if not verdict.member:
            raise _ApiError(409, verdict.to_json())
        self._send(200, zero_part(session.current).to_json())

    def _handle_class(self, query: dict) -> None:
        try:
            n = int(query.get("n", ["0"])[0])
            m = int(query.get("m", ["0"])[0])
        except ValueError:
            raise _ApiError(400, {"error": "n and m must be integers"})
        if n < 1 or m < 1:
            raise _ApiError(400, {"error": "n and m must be positive"})
        try:
            reps = self.state.class_representatives(n, m)
        except ClassLimitExceeded as exc:
            raise _ApiError(400, {"error": str(exc)})
        self._send(200, {"n": n, "m": m, "count": len(reps), "representatives": reps})


def make_server(host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    state = ServiceState()
    handler = type("BoundHandler", (Handler,), {"state": state})
    return ThreadingHTTPServer((host, port), handler)


def serve(host: str = "127.0.0.1", port: int = 8977) -> None:
    server = make_server(host, port)
    actual = server.server_address[1]
    print(f"listening on http://{host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
