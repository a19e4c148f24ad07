"""Discovery and line accounting for Java source trees."""

from __future__ import annotations

import os

from .errors import InputError
from .javaparse import classify_lines
from .log import ScanLog
from .models import SourceFile

SOURCE_SUFFIX = ".java"


def scan_tree(root: str, log: ScanLog | None = None) -> list[SourceFile]:
    """Collect every Java source file under ``root``.

    Files are returned sorted by their relative path (forward slashes), so
    the result is stable across platforms and directory enumeration order.
    Files that cannot be decoded as UTF-8 are skipped with a warning; an
    unreadable or missing root is a hard input error.
    """
    log = log or ScanLog()
    if not os.path.isdir(root):
        raise InputError(f"not a readable directory: {root}")
    paths: list[str] = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in filenames:
            if name.endswith(SOURCE_SUFFIX):
                paths.append(os.path.join(dirpath, name))
    paths.sort(key=lambda p: os.path.relpath(p, root).replace(os.sep, "/"))
    files: list[SourceFile] = []
    for path in paths:
        rel = os.path.relpath(path, root).replace(os.sep, "/")
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except UnicodeDecodeError:
            log.warn(rel, "not valid UTF-8, skipped")
            continue
        except OSError as exc:
            log.warn(rel, f"unreadable ({exc.strerror or exc}), skipped")
            continue
        total, comment, blank = classify_lines(text)
        files.append(
            SourceFile(
                path=rel,
                text=text,
                total_lines=total,
                comment_lines=comment,
                blank_lines=blank,
            )
        )
    return files
