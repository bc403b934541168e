"""Local HTTP+JSON session service: the engine front-door for the explorer UI.

Sessions are in-memory; each session serializes its own mutations behind a
lock while independent sessions run concurrently.  The server binds to the
loopback interface unless explicitly widened.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Dict, List, Optional, Tuple
from urllib.parse import parse_qs, urlparse

from .laurent import LaurentPolynomial
from .matrices import ExtendedExchangeMatrix, freeze
from .presets import PRESET_NAMES, PresetError, preset_seed
from .quivers import Quiver
from .search import ExplorationLimits, explore_seeds
from .seeds import (
    Seed,
    SeedError,
    collapse_word,
    initial_seed,
    mutate_seed,
    seed_from_json,
    seed_to_json,
    to_triple,
    unlabeled_key,
)
from .ypatterns import hat_y

DEFAULT_UNDO_DEPTH = 100


class Session:
    """One exploration session: a current seed plus bounded undo/redo stacks."""

    def __init__(self, seed: Seed, origin: str, max_depth: int = DEFAULT_UNDO_DEPTH):
        self.id = uuid.uuid4().hex
        self.origin = origin
        self.current = seed
        self.undo_stack: List[Seed] = []
        self.redo_stack: List[Seed] = []
        self.max_depth = max_depth
        self.lock = threading.Lock()

    def mutate(self, k: int) -> Seed:
        with self.lock:
            nxt = mutate_seed(self.current, k)
            self.undo_stack.append(self.current)
            if len(self.undo_stack) > self.max_depth:
                self.undo_stack.pop(0)
            self.redo_stack.clear()
            self.current = nxt
            return nxt

    def undo(self) -> Seed:
        with self.lock:
            if not self.undo_stack:
                raise SeedError("nothing to undo")
            self.redo_stack.append(self.current)
            self.current = self.undo_stack.pop()
            return self.current

    def redo(self) -> Seed:
        with self.lock:
            if not self.redo_stack:
                raise SeedError("nothing to redo")
            self.undo_stack.append(self.current)
            self.current = self.redo_stack.pop()
            return self.current


def seed_state(session: Session) -> Dict:
    s = session.current
    quiver = Quiver.from_matrix(s.matrix) if s.matrix.is_skew_symmetric() else None
    triple = to_triple(s)
    frozen_names = [f"x{i}" for i in range(s.n + 1, s.m + 1)]
    yhat = hat_y(s)
    state = {
        "id": session.id,
        "origin": session.origin,
        "m": s.m,
        "n": s.n,
        "matrix": [list(row) for row in s.matrix.rows],
        "cluster": list(s.cluster_strings()),
        "coefficients": [t.as_string(frozen_names) for t in triple.coeffs],
        "yhat": [
            {"num": v.num.canonical_str(), "den": v.den.canonical_str()}
            for v in yhat.yvals
        ],
        "word": list(s.word),
        "undoDepth": len(session.undo_stack),
        "redoDepth": len(session.redo_stack),
    }
    if quiver is not None:
        state["quiver"] = {
            "vertices": [
                {"id": v, "mutable": v <= quiver.n} for v in range(1, quiver.m + 1)
            ],
            "arrows": [[i, j, mult] for (i, j), mult in sorted(quiver.arrows.items())],
        }
    return state


class ServiceState:
    def __init__(self):
        self.sessions: Dict[str, Session] = {}
        self.lock = threading.Lock()

    def create(self, payload: Dict) -> Session:
        if "preset" in payload:
            seed = preset_seed(str(payload["preset"]))
            origin = str(payload["preset"])
        elif "seed" in payload:
            seed = seed_from_json(json.dumps(payload["seed"]))
            origin = "custom"
        else:
            raise SeedError("body must carry `preset` or `seed`")
        session = Session(seed, origin)
        with self.lock:
            self.sessions[session.id] = session
        return session

    def get(self, sid: str) -> Optional[Session]:
        with self.lock:
            return self.sessions.get(sid)


def _graph_payload(session: Session, max_nodes: int, max_depth: int) -> Dict:
    graph = explore_seeds(
        session.current, ExplorationLimits(max_nodes=max_nodes, max_depth=max_depth)
    )
    current_key = unlabeled_key(session.current)
    current_idx = next(
        (i for i, key in enumerate(graph.nodes) if key == current_key), 0
    )
    return {
        "nodes": [{"index": i, "depth": graph.depths[i]} for i in range(len(graph.nodes))],
        "edges": sorted({(a, k, b) for a, k, b in graph.edges}),
        "truncated": graph.truncated,
        "current": current_idx,
    }


class _Handler(BaseHTTPRequestHandler):
    state: ServiceState = None  # installed by make_server
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, code: int, payload: Dict) -> None:
        body = json.dumps(payload).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _body(self) -> Dict:
        length = int(self.headers.get("Content-Length") or 0)
        if not length:
            return {}
        return json.loads(self.rfile.read(length).decode() or "{}")

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            if parts == ["presets"]:
                self._send(200, {"presets": PRESET_NAMES})
                return
            if len(parts) >= 2 and parts[0] == "sessions":
                session = self.state.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                if len(parts) == 2:
                    self._send(200, seed_state(session))
                    return
                if len(parts) == 3 and parts[2] == "graph":
                    q = parse_qs(url.query)
                    max_nodes = int(q.get("maxNodes", ["200"])[0])
                    max_depth = int(q.get("maxDepth", ["8"])[0])
                    self._send(200, _graph_payload(session, max_nodes, max_depth))
                    return
            self._send(404, {"error": "no such endpoint"})
        except (ValueError, KeyError) as exc:
            self._send(422, {"error": str(exc)})

    def do_POST(self):
        url = urlparse(self.path)
        parts = [p for p in url.path.split("/") if p]
        try:
            if parts == ["sessions"]:
                try:
                    session = self.state.create(self._body())
                except (PresetError, SeedError, json.JSONDecodeError) as exc:
                    self._send(422, {"error": str(exc)})
                    return
                self._send(200, seed_state(session))
                return
            if len(parts) == 3 and parts[0] == "sessions":
                session = self.state.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                action = parts[2]
                if action == "mutate":
                    body = self._body()
                    k = body.get("k")
                    if not isinstance(k, int) or not 1 <= k <= session.current.n:
                        self._send(422, {"error": f"k must be in 1..{session.current.n}"})
                        return
                    session.mutate(k)
                    self._send(200, seed_state(session))
                    return
                if action in ("undo", "redo"):
                    try:
                        session.undo() if action == "undo" else session.redo()
                    except SeedError as exc:
                        self._send(422, {"error": str(exc)})
                        return
                    self._send(200, seed_state(session))
                    return
            self._send(404, {"error": "no such endpoint"})
        except (ValueError, KeyError) as exc:
            self._send(422, {"error": str(exc)})


def make_server(host: str = "127.0.0.1", port: int = 8765) -> ThreadingHTTPServer:
    state = ServiceState()
    handler = type("Handler", (_Handler,), {"state": state})
    server = ThreadingHTTPServer((host, port), handler)
    server.service_state = state
    return server


def serve(host: str = "127.0.0.1", port: int = 8765) -> None:
    server = make_server(host, port)
    try:
        server.serve_forever()
    finally:
        server.server_close()
