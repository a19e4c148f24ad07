"""Lexer, line classification, and structural parsing."""

from __future__ import annotations

import pytest

from sysmap.errors import JavaParseError
from sysmap.javaparse import classify_lines, parse_unit, scan_text
from sysmap.models import SourceFile


def unit(text: str, path: str = "T.java") -> SourceFile:
    total, comment, blank = classify_lines(text)
    return SourceFile(path=path, text=text, total_lines=total,
                      comment_lines=comment, blank_lines=blank)


class TestLineClassification:
    def test_code_comment_blank(self):
        assert classify_lines("class A{}\n// c\n\n") == (3, 1, 1)

    def test_no_trailing_newline(self):
        assert classify_lines("class A{}") == (1, 0, 0)

    def test_empty_text(self):
        assert classify_lines("") == (0, 0, 0)

    def test_mixed_line_is_code(self):
        # trailing comment does not make a code line a comment line
        assert classify_lines("int x; // note\n") == (1, 0, 0)

    def test_block_comment_spanning_lines(self):
        text = "class A { /* one\ntwo\nthree */ }\n"
        total, comment, blank = classify_lines(text)
        assert (total, comment, blank) == (3, 1, 0)

    def test_string_with_comment_markers(self):
        assert classify_lines('class A { String s = "// no"; }\n') == (1, 0, 0)

    def test_text_block_lines_are_code(self):
        text = 'class A {\n  String s = """\n  // looks like comment\n  """;\n}\n'
        assert classify_lines(text) == (5, 0, 0)


class TestScanErrors:
    def test_unterminated_string(self):
        scan = scan_text('class A { String s = "oops; }')
        assert scan.errors and scan.errors[0][1] == "unterminated string literal"

    def test_unterminated_block_comment(self):
        scan = scan_text("class A {} /* drifts off")
        assert scan.errors

    def test_parse_unit_raises_on_scan_error(self):
        with pytest.raises(JavaParseError):
            parse_unit(unit('class A { char c = \'x; }'))


class TestBasicDeclarations:
    def test_single_class_with_field_and_method(self):
        models = parse_unit(unit("package p; class A { int x; void m(){ if(x>0) x--; } }"))
        assert len(models) == 1
        a = models[0]
        assert a.qualified_name == "p.A"
        assert a.kind == "class"
        assert [f.name for f in a.fields] == ["x"]
        assert len(a.methods) == 1
        assert a.methods[0].name == "m"
        assert a.methods[0].decision_points == 1
        assert a.methods[0].accessed_field_names == {"x"}

    def test_interface(self):
        models = parse_unit(unit("interface I { void f(); }"))
        assert models[0].kind == "interface"
        assert models[0].qualified_name == "I"
        assert len(models[0].methods) == 1
        assert models[0].methods[0].decision_points == 0

    def test_two_top_level_classes_in_declaration_order(self):
        models = parse_unit(unit("package p; class B {} class A {}"))
        assert [m.qualified_name for m in models] == ["p.B", "p.A"]

    def test_enum_constants_are_not_fields_or_methods(self):
        models = parse_unit(unit("enum E { A, B, C; int f; void m(){} }"))
        e = models[0]
        assert e.kind == "enum"
        assert [f.name for f in e.fields] == ["f"]
        assert [m.name for m in e.methods] == ["m"]

    def test_annotation_type_is_interface(self):
        models = parse_unit(unit('@interface Marker { String value() default "x"; }'))
        assert models[0].kind == "interface"
        assert models[0].methods[0].name == "value"

    def test_record_components_become_fields(self):
        models = parse_unit(unit("record R(int a, String b) { int s(){ return a; } }"))
        r = models[0]
        assert r.kind == "class"
        assert [f.name for f in r.fields] == ["a", "b"]
        assert r.methods[0].accessed_field_names == {"a"}

    def test_nested_class_names_and_order(self):
        text = "package p; class Outer { class Inner {} } class Next {}"
        models = parse_unit(unit(text))
        assert [m.qualified_name for m in models] == ["p.Outer", "p.Outer.Inner", "p.Next"]

    def test_default_package(self):
        models = parse_unit(unit("class A {}"))
        assert models[0].qualified_name == "A"
        assert models[0].package_name == ""

    def test_loc_span_runs_from_declaration_to_closing_brace(self):
        # the @Deprecated line is not part of the declaration span
        text = "package p;\n\n@Deprecated\nclass A {\n  int x;\n}\n"
        models = parse_unit(unit(text))
        assert models[0].loc_span == 3  # lines 4..6

    def test_comment_lines_inside_span_only(self):
        text = "// outside\nclass A {\n  // inside\n  int x;\n}\n"
        models = parse_unit(unit(text))
        assert models[0].loc_span == 4
        assert models[0].comment_lines_in_span == 1


class TestDecisionPoints:
    def count(self, body: str) -> int:
        models = parse_unit(unit(f"class A {{ void m() {{ {body} }} }}"))
        return models[0].methods[0].decision_points

    def test_if_else_chain(self):
        assert self.count("if (a()) {} else if (b()) {} else {}") == 2

    def test_loops(self):
        assert self.count("for (;;) { break; } while (a()) {}") == 2

    def test_do_while_counts_once(self):
        assert self.count("do { x(); } while (a());") == 1

    def test_do_while_without_braces(self):
        assert self.count("do x(); while (a());") == 1

    def test_nested_do_while(self):
        assert self.count("do { do { x(); } while (b()); } while (a());") == 2

    def test_while_after_do_while_still_counts(self):
        assert self.count("do { x(); } while (a()); while (b()) {}") == 2

    def test_switch_cases_counted_default_not(self):
        assert self.count("switch (x) { case 1: break; case 2: break; default: break; }") == 2

    def test_ternary_after_comparison(self):
        # comparisons are not decisions; only the '?' counts
        assert self.count("int y = x > 0 ? 1 : 2;") == 1

    def test_ternary_only(self):
        assert self.count("int y = f() ? 1 : 2;") == 1

    def test_generic_wildcard_is_not_ternary(self):
        assert self.count("java.util.List<? extends Number> xs = null;") == 0

    def test_short_circuit_operators(self):
        assert self.count("boolean b = x() && y() || z();") == 2

    def test_catch(self):
        assert self.count("try { x(); } catch (Exception e) { } finally { }") == 1

    def test_multi_catch_is_one_decision(self):
        assert self.count("try { x(); } catch (A | B e) { }") == 1

    def test_lambda_body_counts_into_method(self):
        assert self.count("Runnable r = () -> { if (x()) y(); };") == 1

    def test_bitwise_and_is_not_decision(self):
        assert self.count("int y = a & b;") == 0


class TestReferencesAndAccess:
    def refs(self, text: str) -> set[str]:
        return parse_unit(unit(text))[0].referenced_type_names

    def test_field_param_return_local_new(self):
        text = ("class A { Foo f; Bar m(Baz b) { Qux q = new Quux(); return null; } }")
        assert self.refs(text) == {"Foo", "Bar", "Baz", "Qux", "Quux"}

    def test_generic_arguments_contribute_base_names(self):
        text = "class A { java.util.Map<Foo, java.util.List<Bar>> m; }"
        refs = self.refs(text)
        assert {"Foo", "Bar"} <= refs

    def test_static_access_counts(self):
        assert "Config" in self.refs("class A { void m() { int x = Config.limit(); } }")

    def test_own_name_excluded(self):
        assert self.refs("class A { A next; }") == set()

    def test_cast_not_counted(self):
        assert "Foo" not in self.refs("class A { void m(Object o) { Object x = (Foo) o; } }")

    def test_supertypes_recorded_separately(self):
        models = parse_unit(unit("class A extends B implements C, D {}"))
        a = models[0]
        assert a.superclass_name == "B"
        assert a.interface_names == ["C", "D"]

    def test_interface_extends_goes_to_interfaces(self):
        models = parse_unit(unit("interface A extends B, C {}"))
        assert models[0].superclass_name is None
        assert models[0].interface_names == ["B", "C"]

    def test_this_access_and_shadowed_param(self):
        text = "class A { int x; void m(int x) { this.x = x; } }"
        models = parse_unit(unit(text))
        assert models[0].methods[0].accessed_field_names == {"x"}

    def test_locals_not_fields(self):
        text = "class A { int x; void m() { int y = 1; y = y + x; } }"
        models = parse_unit(unit(text))
        assert models[0].methods[0].accessed_field_names == {"x"}

    def test_super_field_access_ignored(self):
        text = "class A { int x; void m() { super.x = 1; } }"
        models = parse_unit(unit(text))
        assert models[0].methods[0].accessed_field_names == set()

    def test_multi_declarator_fields(self):
        models = parse_unit(unit("class A { int x = 3, y, z = 9; }"))
        assert [f.name for f in models[0].fields] == ["x", "y", "z"]

    def test_array_initializer_names_are_accesses(self):
        text = "class A { int b; void m() { int[] xs = {1, b}; } }"
        models = parse_unit(unit(text))
        assert models[0].methods[0].accessed_field_names == {"b"}


class TestFoldedClasses:
    def test_anonymous_class_methods_fold_into_host(self):
        text = (
            "class A { int hits; Runnable r() { return new Runnable() {"
            " public void run() { if (hits > 0) { hits--; } } }; } }"
        )
        models = parse_unit(unit(text))
        assert len(models) == 1
        a = models[0]
        names = [m.name for m in a.methods]
        assert names == ["r", "run"]
        run = a.methods[1]
        assert run.decision_points == 1
        assert run.accessed_field_names == {"hits"}
        assert "Runnable" in a.referenced_type_names

    def test_local_class_folds(self):
        text = "class A { void m() { class H { void h() { if (x()) y(); } } new H().h(); } }"
        models = parse_unit(unit(text))
        assert len(models) == 1
        assert [m.name for m in models[0].methods] == ["m", "h"]
        assert models[0].methods[1].decision_points == 1

    def test_enum_constant_body_folds(self):
        text = "enum E { A { void go() {} }; abstract void go(); }"
        models = parse_unit(unit(text))
        assert len(models) == 1
        assert sorted(m.name for m in models[0].methods) == ["go", "go"]

    def test_initializer_block_refs_but_no_method(self):
        text = "class A { static { Helper.init(); } }"
        models = parse_unit(unit(text))
        assert models[0].methods == []
        assert "Helper" in models[0].referenced_type_names


class TestParseFailures:
    def test_unbalanced_body_raises(self):
        with pytest.raises(JavaParseError):
            parse_unit(unit("class A { void m() { if (x) { } "))

    def test_error_carries_path_and_line(self):
        try:
            parse_unit(unit("class A {", path="p/Broken.java"))
        except JavaParseError as exc:
            assert exc.path == "p/Broken.java"
            assert exc.line >= 1
            assert "p/Broken.java" in str(exc)
        else:
            pytest.fail("expected a parse error")

    def test_stray_token_at_top_level(self):
        with pytest.raises(JavaParseError):
            parse_unit(unit("package p; 42"))
