#!/usr/bin/env python3
"""Run the whole pipeline on the committed fixture corpus.

Analyzes the corpus twice under two version labels (so the evolution
section has something to compare), writes fixture_bundle.json next to
this script's repo root, and prints the report table. Handy as a smoke
test and as input for the viewer:

    python3 scripts/analyze_fixture_demo.py
    sysmap serve fixture_bundle.json --assets frontend/dist
"""

from __future__ import annotations

import os
import sys

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(REPO, "src"))

from sysmap.cli import main  # noqa: E402 (path setup above)

CORPUS = os.path.join(REPO, "tests", "fixtures", "corpus")
OUT = os.path.join(REPO, "fixture_bundle.json")


if __name__ == "__main__":
    code = main([
        "analyze",
        "--project", "fixture-zoo",
        "--version", f"1.0={CORPUS}",
        "--version", f"1.1={CORPUS}",
        "-o", OUT,
    ])
    if code == 0:
        code = main(["report", OUT])
    sys.exit(code)
