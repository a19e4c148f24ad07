"""Static file server bridging a bundle to the browser viewer.

Serves the validated bundle at /bundle.json and, when an assets directory
is supplied (the built viewer), its files at /. Without assets a small
built-in page confirms the server and bundle are alive, so the analysis
side works end to end before any frontend exists.
"""

from __future__ import annotations

import errno
import html
import os
import posixpath
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .bundle import read_bundle
from .errors import ServerError

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json; charset=utf-8",
    ".wasm": "application/wasm",
}

_FALLBACK_PAGE = """<!DOCTYPE html>
<html>
<head><meta charset="utf-8"><title>sysmap</title></head>
<body>
<h1>sysmap server</h1>
<p>Bundle for project <strong>{project}</strong> with {count} snapshot(s)
is available at <a href="/bundle.json">/bundle.json</a>.</p>
<p>No viewer assets were supplied; start with --assets pointing at the
built frontend to browse the city.</p>
</body>
</html>
"""


def _make_handler(bundle_bytes: bytes, assets_dir: str | None, fallback: bytes):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def do_GET(self) -> None:  # noqa: N802 (http.server API)
            body, content_type, status = self._resolve()
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Cache-Control", "no-store")
            self.end_headers()
            self.wfile.write(body)

        def _resolve(self) -> tuple[bytes, str, int]:
            path = self.path.split("?", 1)[0].split("#", 1)[0]
            if path == "/bundle.json":
                return bundle_bytes, _CONTENT_TYPES[".json"], HTTPStatus.OK
            if assets_dir is None:
                if path == "/" or path == "/index.html":
                    return fallback, _CONTENT_TYPES[".html"], HTTPStatus.OK
                return b"not found\n", "text/plain; charset=utf-8", HTTPStatus.NOT_FOUND
            if path == "/":
                path = "/index.html"
            local = _safe_join(assets_dir, path)
            if local is None or not os.path.isfile(local):
                return b"not found\n", "text/plain; charset=utf-8", HTTPStatus.NOT_FOUND
            ext = os.path.splitext(local)[1].lower()
            content_type = _CONTENT_TYPES.get(ext, "application/octet-stream")
            with open(local, "rb") as handle:
                return handle.read(), content_type, HTTPStatus.OK

    return Handler


def _safe_join(root: str, url_path: str) -> str | None:
    """Map a URL path under the assets root, refusing traversal."""
    cleaned = posixpath.normpath(url_path.lstrip("/"))
    if cleaned.startswith("..") or os.path.isabs(cleaned):
        return None
    return os.path.join(root, *cleaned.split("/"))


def make_server(
    bundle_path: str, port: int, assets_dir: str | None = None, host: str = "127.0.0.1"
) -> ThreadingHTTPServer:
    """Validate the bundle and return a bound (not yet running) server."""
    bundle = read_bundle(bundle_path)  # BundleError propagates (exit 3)
    with open(bundle_path, "rb") as handle:
        bundle_bytes = handle.read()
    fallback = _FALLBACK_PAGE.format(
        project=html.escape(bundle.project_name), count=len(bundle.snapshots)
    ).encode("utf-8")
    if assets_dir is not None and not os.path.isdir(assets_dir):
        raise ServerError(f"assets directory not found: {assets_dir}")
    handler = _make_handler(bundle_bytes, assets_dir, fallback)
    try:
        return ThreadingHTTPServer((host, port), handler)
    except OSError as exc:
        if exc.errno in (errno.EADDRINUSE, errno.EACCES):
            raise ServerError(f"cannot bind port {port}: {exc.strerror}") from exc
        raise ServerError(f"cannot start server: {exc}") from exc


def run_serve(
    bundle_path: str, port: int, assets_dir: str | None = None, host: str = "127.0.0.1"
) -> int:
    """Serve until interrupted."""
    server = make_server(bundle_path, port, assets_dir, host)
    print(f"serving {bundle_path} on http://{host}:{server.server_address[1]}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
