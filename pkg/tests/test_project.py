"""Project assembly and type name resolution."""

from __future__ import annotations

import pytest

from sysmap.errors import InputError
from sysmap.log import ScanLog
from sysmap.project import build_project


def write(tmp_path, rel: str, text: str) -> None:
    path = tmp_path / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def test_basic_project(tmp_path):
    write(tmp_path, "p/A.java", "package p; class A {}\n")
    write(tmp_path, "p/B.java", "package p; class B extends A {}\n")
    project = build_project(tmp_path, "v1", ScanLog())
    assert project.version_label == "v1"
    assert [c.qualified_name for c in project.classes] == ["p.A", "p.B"]
    assert set(project.packages) == {"p"}


def test_duplicate_class_is_fatal_and_names_both_files(tmp_path):
    write(tmp_path, "one/A.java", "package p; class A {}\n")
    write(tmp_path, "two/A.java", "package p; class A {}\n")
    with pytest.raises(InputError) as exc:
        build_project(tmp_path, "v1", ScanLog())
    message = str(exc.value)
    assert "p.A" in message
    assert "one/A.java" in message and "two/A.java" in message


def test_unparseable_file_skipped_with_warning(tmp_path):
    write(tmp_path, "Bad.java", "class Bad {\n")
    write(tmp_path, "Good.java", "class Good {}\n")
    log = ScanLog()
    project = build_project(tmp_path, "v1", log)
    assert [c.qualified_name for c in project.classes] == ["Good"]
    assert any(path == "Bad.java" for path, _ in log.warnings)


class TestResolve:
    def build(self, tmp_path, files: dict[str, str]):
        for rel, text in files.items():
            write(tmp_path, rel, text)
        return build_project(tmp_path, "v1", ScanLog())

    def test_same_package_wins(self, tmp_path):
        project = self.build(tmp_path, {
            "p/A.java": "package p; class A {}\n",
            "q/A.java": "package q; class A {}\n",
        })
        assert project.resolve("A", "p") == "p.A"
        assert project.resolve("A", "q") == "q.A"

    def test_nested_type_reachable_from_its_package(self, tmp_path):
        project = self.build(tmp_path, {
            "p/Outer.java": "package p; class Outer { static class Helper {} }\n",
            "q/Helper.java": "package q; class Helper {}\n",
        })
        # Inside p both the dotted local name and the bare simple name hit
        # the nested type before any cross-package candidate.
        assert project.resolve("Outer.Helper", "p") == "p.Outer.Helper"
        assert project.resolve("Helper", "p") == "p.Outer.Helper"
        assert project.resolve("Helper", "q") == "q.Helper"

    def test_qualified_name_exact(self, tmp_path):
        project = self.build(tmp_path, {
            "p/A.java": "package p; class A {}\n",
            "q/User.java": "package q; class User { p.A a; }\n",
        })
        assert project.resolve("p.A", "q") == "p.A"

    def test_unique_simple_name_across_packages(self, tmp_path):
        project = self.build(tmp_path, {
            "p/Only.java": "package p; class Only {}\n",
            "q/User.java": "package q; class User { Only o; }\n",
        })
        assert project.resolve("Only", "q") == "p.Only"

    def test_ambiguous_simple_name_unresolved(self, tmp_path):
        project = self.build(tmp_path, {
            "p/Dup.java": "package p; class Dup {}\n",
            "q/Dup.java": "package q; class Dup {}\n",
            "r/User.java": "package r; class User { Dup d; }\n",
        })
        assert project.resolve("Dup", "r") is None

    def test_external_name_unresolved(self, tmp_path):
        project = self.build(tmp_path, {
            "p/A.java": "package p; class A {}\n",
        })
        assert project.resolve("String", "p") is None
        assert project.resolve("java.util.List", "p") is None
