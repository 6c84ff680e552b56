"""A tiny HTTP translation service backed by the bundled dictionaries.

Exists so the service client has something real to talk to in tests and
demos. One endpoint: POST /translate with a JSON body

    {"from": "en", "to": "es", "phrases": ["move left"], "hint": "infinitive"}

answers

    {"translations": ["moverse izquierda"], "confidences": [1.0]}

Unknown language pairs answer 404; malformed bodies answer 400.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .backends import DictionaryBackend, hint_from_wire
from .errors import BackendUnavailable


class _Handler(BaseHTTPRequestHandler):
    def _reply(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self) -> None:  # noqa: N802  (http.server API)
        if self.path.rstrip("/") != "/translate":
            self._reply(404, {"error": "unknown endpoint"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            request = json.loads(self.rfile.read(length).decode("utf-8"))
            source = request["from"]
            target = request["to"]
            phrases = request["phrases"]
            hint = hint_from_wire(request.get("hint", "none"))
            if not isinstance(phrases, list):
                raise TypeError("phrases must be a list")
        except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
            self._reply(400, {"error": f"bad request: {exc}"})
            return
        try:
            backend = DictionaryBackend.for_pair(source, target)
        except BackendUnavailable as exc:
            self._reply(404, {"error": str(exc)})
            return
        pairs = [backend.translate_phrase(p, source, target, hint) for p in phrases]
        self._reply(200, {
            "translations": [t for t, _ in pairs],
            "confidences": [c for _, c in pairs],
        })

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        pass


def make_server(host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Build (but do not start) the server; port 0 picks a free port."""
    return ThreadingHTTPServer((host, port), _Handler)


def start_in_thread(server: ThreadingHTTPServer) -> threading.Thread:
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return thread


def serve(host: str, port: int) -> None:
    """Run until interrupted; prints the bound address."""
    server = make_server(host, port)
    bound = server.server_address
    print(f"stub translation service on http://{bound[0]}:{bound[1]}/translate")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
