"""Source tree walking."""

from __future__ import annotations

import pytest

from sysmap.errors import InputError
from sysmap.log import ScanLog
from sysmap.scanner import scan_tree


def test_files_sorted_by_relative_path(tmp_path):
    (tmp_path / "b").mkdir()
    (tmp_path / "a").mkdir()
    (tmp_path / "b" / "One.java").write_text("class One {}\n")
    (tmp_path / "a" / "Two.java").write_text("class Two {}\n")
    (tmp_path / "Zero.java").write_text("class Zero {}\n")
    files = scan_tree(tmp_path, ScanLog())
    assert [f.path for f in files] == ["Zero.java", "a/Two.java", "b/One.java"]


def test_non_java_files_ignored(tmp_path):
    (tmp_path / "notes.txt").write_text("class Fake {}\n")
    (tmp_path / "Real.java").write_text("class Real {}\n")
    files = scan_tree(tmp_path, ScanLog())
    assert [f.path for f in files] == ["Real.java"]


def test_undecodable_file_skipped_with_warning(tmp_path, capsys):
    (tmp_path / "Bad.java").write_bytes(b"\xff\xfe\x00 garbage")
    (tmp_path / "Good.java").write_text("class Good {}\n")
    log = ScanLog()
    files = scan_tree(tmp_path, log)
    assert [f.path for f in files] == ["Good.java"]
    assert len(log.warnings) == 1
    assert log.warnings[0][0] == "Bad.java"
    assert "Bad.java" in capsys.readouterr().err


def test_missing_directory_is_fatal(tmp_path):
    with pytest.raises(InputError) as exc:
        scan_tree(tmp_path / "nope", ScanLog())
    assert "nope" in str(exc.value)


def test_file_as_root_is_fatal(tmp_path):
    lone = tmp_path / "A.java"
    lone.write_text("class A {}\n")
    with pytest.raises(InputError):
        scan_tree(lone, ScanLog())


def test_line_counts_attached(tmp_path):
    (tmp_path / "A.java").write_text("class A {}\n// c\n\n")
    files = scan_tree(tmp_path, ScanLog())
    assert files[0].total_lines == 3
    assert files[0].comment_lines == 1
    assert files[0].blank_lines == 1
