"""Minimal HTTP server exposing a local classifier over the remote wire protocol."""

from __future__ import annotations

import json
import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .model import Classifier

log = logging.getLogger(__name__)


def make_handler(classifier: Classifier) -> type[BaseHTTPRequestHandler]:
    labels = [str(c) for c in classifier.class_names]

    class Handler(BaseHTTPRequestHandler):
        def _send(self, status: int, body: dict) -> None:
            data = json.dumps(body).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def do_POST(self):
            try:
                length = int(self.headers.get("Content-Length", 0))
                payload = json.loads(self.rfile.read(length) or b"null")
                text = payload["text"]
                if not isinstance(text, str):
                    raise TypeError("text must be a string")
            except (ValueError, KeyError, TypeError) as exc:
                self._send(400, {"error": f"bad request: {exc}"})
                return
            pred = classifier.predict(text)
            self._send(200, {"labels": labels, "confidences": list(pred.confidences)})

        def do_GET(self):
            self._send(200, {"labels": labels})

        def log_message(self, fmt, *args):
            log.debug("%s - " + fmt, self.address_string(), *args)

    return Handler


def make_server(classifier: Classifier, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    """Bind a server; ``port=0`` picks a free port (see ``server.server_address``)."""
    return ThreadingHTTPServer((host, port), make_handler(classifier))


def serve_in_thread(classifier: Classifier, host: str = "127.0.0.1", port: int = 0):
    server = make_server(classifier, host, port)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
