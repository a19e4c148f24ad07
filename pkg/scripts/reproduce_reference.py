#!/usr/bin/env python3
"""Check the analyzer against two published ProGuard source releases.

The reference numbers: ProGuard 4.9 has 33 packages, 557 classes and
85722 lines across its class spans; 6.2 has 41 packages, 802 classes
and 136518 lines. Package counts are expected to match exactly; class
counts within 10% and line counts within 15%, since class folding and
line accounting conventions vary between tools.

Usage:
    python3 scripts/reproduce_reference.py --root-49 path/to/proguard4.9 \
        --root-62 path/to/proguard6.2

    # or let the script download and unpack the archives (needs network)
    python3 scripts/reproduce_reference.py --download workdir/

With both trees in hand you can also gate the test suite on them:

    SYSMAP_PROGUARD_49=... SYSMAP_PROGUARD_62=... pytest tests/test_acceptance.py
"""

from __future__ import annotations

import argparse
import os
import sys
import tarfile
import urllib.request
import zipfile

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(REPO, "src"))

from sysmap.log import ScanLog  # noqa: E402
from sysmap.metrics import compute_all  # noqa: E402
from sysmap.project import build_project  # noqa: E402

ARCHIVES = {
    "4.9": "https://downloads.sourceforge.net/project/proguard/proguard/4.9/proguard4.9.tar.gz",
    "6.2": "https://github.com/Guardsquare/proguard/archive/refs/tags/v6.2.tar.gz",
}

# (packages exact, classes +-10%, loc +-15%)
EXPECTED = {
    "4.9": (33, 557, 85722),
    "6.2": (41, 802, 136518),
}


def fetch_and_unpack(version: str, workdir: str) -> str:
    url = ARCHIVES[version]
    archive = os.path.join(workdir, os.path.basename(url))
    if not os.path.exists(archive):
        print(f"downloading {url}")
        urllib.request.urlretrieve(url, archive)
    target = os.path.join(workdir, f"proguard-{version}")
    if not os.path.isdir(target):
        os.makedirs(target, exist_ok=True)
        if archive.endswith(".zip"):
            with zipfile.ZipFile(archive) as zf:
                zf.extractall(target)
        else:
            with tarfile.open(archive) as tf:
                tf.extractall(target)
    return target


def java_root(tree: str) -> str:
    """Pick the directory holding the most .java files (usually src/)."""
    best, best_count = tree, 0
    for dirpath, dirnames, filenames in os.walk(tree):
        if os.path.basename(dirpath) != "src":
            continue
        count = sum(
            name.endswith(".java")
            for sub, _, names in os.walk(dirpath)
            for name in names
        )
        if count > best_count:
            best, best_count = dirpath, count
    return best


def check(version: str, root: str) -> bool:
    packages, classes, loc = EXPECTED[version]
    project = build_project(root, version, ScanLog())
    _, agg = compute_all(project, ScanLog())
    ok = True

    def verdict(label: str, got, want, tolerance: float) -> None:
        nonlocal ok
        slack = want * tolerance
        good = abs(got - want) <= slack
        ok = ok and good
        span = f"(within {tolerance:.0%})" if tolerance else "(exact)"
        print(f"  {version} {label}: got {got}, expected {want} {span}"
              f" -> {'ok' if good else 'MISMATCH'}")

    print(f"proguard {version} @ {root}")
    verdict("packages", agg.package_count, packages, 0.0)
    verdict("classes", agg.class_count, classes, 0.10)
    verdict("loc", agg.total_loc, loc, 0.15)
    return ok


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--root-49", help="path to an unpacked ProGuard 4.9 tree")
    parser.add_argument("--root-62", help="path to an unpacked ProGuard 6.2 tree")
    parser.add_argument("--download", metavar="DIR",
                        help="download and unpack both releases into DIR")
    args = parser.parse_args()

    roots: dict[str, str] = {}
    if args.download:
        os.makedirs(args.download, exist_ok=True)
        for version in ARCHIVES:
            roots[version] = java_root(fetch_and_unpack(version, args.download))
    if args.root_49:
        roots["4.9"] = java_root(args.root_49)
    if args.root_62:
        roots["6.2"] = java_root(args.root_62)
    if set(roots) != {"4.9", "6.2"}:
        parser.error("need both trees: pass --download DIR, or --root-49 and --root-62")

    all_ok = all(check(version, roots[version]) for version in sorted(roots))
    print("reference reproduction:", "PASS" if all_ok else "FAIL")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
