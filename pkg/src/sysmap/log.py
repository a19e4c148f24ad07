"""Line-oriented diagnostic log.

Warnings about skipped files go to the diagnostic stream in the fixed
format ``WARN <path>: <message>`` so they can be grepped out of a run.
The SYSMAP_LOG environment variable (debug|info|warn) picks the least
severe level that still gets written; the default is warn.
"""

from __future__ import annotations

import os
import sys
from typing import TextIO

_LEVELS = {"debug": 10, "info": 20, "warn": 30}


def configured_level() -> int:
    return _LEVELS.get(os.environ.get("SYSMAP_LOG", "warn").lower(), 30)


class ScanLog:
    """Collects diagnostics and mirrors them to a stream."""

    def __init__(self, stream: TextIO | None = None) -> None:
        self.stream = stream if stream is not None else sys.stderr
        self.warnings: list[tuple[str, str]] = []

    def warn(self, path: str, message: str) -> None:
        self.warnings.append((path, message))
        if configured_level() <= 30:
            print(f"WARN {path}: {message}", file=self.stream)

    def info(self, message: str) -> None:
        if configured_level() <= 20:
            print(f"INFO {message}", file=self.stream)

    def debug(self, message: str) -> None:
        if configured_level() <= 10:
            print(f"DEBUG {message}", file=self.stream)
