"""Structural parser for Java compilation units.

This is not a compiler front end.  It recognizes exactly the structure the
metrics need: package/import declarations, type declarations (class,
interface, enum, @interface, record), brace-balanced method and initializer
bodies, field declarations, comments, and string/char literals (so braces
inside literals or comments never confuse a span).  Expressions are scanned,
not parsed: bodies are walked token by token to count branching constructs
and to collect field accesses and type references.

Rules the scan applies:

* Decision points per method: if, for, while, do, case label, catch clause,
  the ternary ``?``, and the short-circuit ``&&``/``||`` operators.  The
  trailing ``while`` of a do-while belongs to the ``do`` and is not counted
  again.  A ``?`` inside a generic argument list is a wildcard, not a
  ternary.
* Referenced types: field/parameter/return/local declaration types, ``new``
  instantiations, and Uppercase identifiers followed by ``.`` (static
  accesses).  Generic type arguments contribute their base names.  Cast
  types, ``throws`` clauses and type-parameter bounds are not collected.
  Primitive types are never references.
* Field accesses: bare identifiers and ``this.<name>`` occurrences inside a
  body, minus identifiers in declared-name positions and call names.  The
  set is intersected with the class's declared field names afterwards, so
  the scan may only overcount when a local shadows a field.
* Annotations are skipped wherever they appear.  Lambda bodies are scanned
  inline, so their branches count toward the enclosing method.
* Anonymous classes, enum constant bodies and local classes are folded into
  the enclosing named class: their methods join its method list and their
  references join its reference set.  Nested *named* types become their own
  models with ``Outer.Inner`` qualified names.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

from .errors import JavaParseError
from .models import ClassModel, FieldModel, MethodModel, SourceFile

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

PRIMITIVES = frozenset(
    "boolean byte char double float int long short void var".split()
)

MODIFIERS = frozenset(
    """public protected private static final abstract native synchronized
    transient volatile strictfp default sealed""".split()
)

_TWO_CHAR_OPS = ("&&", "||", "->", "::")

# Tokens allowed inside a tentatively scanned generic argument list.
_ANGLE_OK = frozenset([",", ".", "?", "[", "]", "&", "@"])
_ANGLE_OK_WORDS = frozenset(["extends", "super"]) | PRIMITIVES


@dataclass
class Token:
    kind: str  # "ident" | "num" | "str" | "char" | "op"
    text: str
    line: int

    def is_ident(self) -> bool:
        return self.kind == "ident"


@dataclass
class ScanResult:
    tokens: list[Token]
    code_lines: set[int]
    comment_lines: set[int]
    errors: list[tuple[int, str]]


def scan_text(text: str) -> ScanResult:
    """Lex Java source, classifying which lines carry code vs comments.

    Never raises; unterminated literals/comments are recorded as errors and
    the scan recovers so that line accounting still completes.
    """
    tokens: list[Token] = []
    code_lines: set[int] = set()
    comment_lines: set[int] = set()
    errors: list[tuple[int, str]] = []

    i, n, line = 0, len(text), 1
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            i += 1
            continue
        if c in " \t\r\f":
            i += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "/":
            comment_lines.add(line)
            while i < n and text[i] != "\n":
                i += 1
            continue
        if c == "/" and i + 1 < n and text[i + 1] == "*":
            start = line
            i += 2
            closed = False
            while i < n:
                if text[i] == "\n":
                    line += 1
                elif text[i] == "*" and i + 1 < n and text[i + 1] == "/":
                    i += 2
                    closed = True
                    break
                i += 1
            if not closed:
                errors.append((start, "unterminated block comment"))
            comment_lines.update(range(start, line + 1))
            continue
        if c == '"':
            if text.startswith('"""', i):
                start = line
                i += 3
                closed = False
                while i < n:
                    if text[i] == "\n":
                        line += 1
                    elif text[i] == "\\":
                        i += 1
                    elif text.startswith('"""', i):
                        i += 3
                        closed = True
                        break
                    i += 1
                if not closed:
                    errors.append((start, "unterminated text block"))
                code_lines.update(range(start, line + 1))
                tokens.append(Token("str", "", start))
                continue
            start = line
            i += 1
            closed = False
            while i < n and text[i] != "\n":
                if text[i] == "\\" and i + 1 < n:
                    i += 2
                    continue
                if text[i] == '"':
                    i += 1
                    closed = True
                    break
                i += 1
            if not closed:
                errors.append((start, "unterminated string literal"))
            code_lines.add(start)
            tokens.append(Token("str", "", start))
            continue
        if c == "'":
            start = line
            i += 1
            closed = False
            while i < n and text[i] != "\n":
                if text[i] == "\\" and i + 1 < n:
                    i += 2
                    continue
                if text[i] == "'":
                    i += 1
                    closed = True
                    break
                i += 1
            if not closed:
                errors.append((start, "unterminated char literal"))
            code_lines.add(start)
            tokens.append(Token("char", "", start))
            continue
        if c.isdigit():
            j = i + 1
            while j < n:
                ch = text[j]
                if ch.isalnum() or ch in "._":
                    j += 1
                elif ch in "+-" and text[j - 1] in "eEpP":
                    j += 1
                else:
                    break
            tokens.append(Token("num", text[i:j], line))
            code_lines.add(line)
            i = j
            continue
        if c.isalpha() or c in "_$":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                j += 1
            tokens.append(Token("ident", text[i:j], line))
            code_lines.add(line)
            i = j
            continue
        if text.startswith("...", i):
            tokens.append(Token("op", "...", line))
            code_lines.add(line)
            i += 3
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR_OPS:
            tokens.append(Token("op", two, line))
            code_lines.add(line)
            i += 2
            continue
        tokens.append(Token("op", c, line))
        code_lines.add(line)
        i += 1
    return ScanResult(tokens, code_lines, comment_lines, errors)


def classify_lines(text: str) -> tuple[int, int, int]:
    """Return (total, comment, blank) physical line counts for a unit.

    A trailing fragment without a newline is one line; a comment line has
    no non-comment content; a blank line has no content at all.
    """
    if text == "":
        return 0, 0, 0
    parts = text.split("\n")
    if parts and parts[-1] == "":
        parts.pop()
    total = len(parts)
    scan = scan_text(text)
    comment = 0
    blank = 0
    for lineno in range(1, total + 1):
        if lineno in scan.code_lines:
            continue
        if lineno in scan.comment_lines:
            comment += 1
        else:
            blank += 1
    return total, comment, blank


@dataclass
class _BodyFacts:
    decision_points: int = 0
    accessed: set[str] = field(default_factory=set)
    refs: set[str] = field(default_factory=set)
    folded_methods: list[MethodModel] = field(default_factory=list)


class _Parser:
    def __init__(self, path: str, scan: ScanResult) -> None:
        self.path = path
        self.toks = scan.tokens
        self.n = len(scan.tokens)
        self.i = 0
        self.comment_lines_sorted = sorted(scan.comment_lines - scan.code_lines)
        self.models: list[ClassModel] = []
        self.package_name = ""

    # -- cursor helpers ---------------------------------------------------

    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < self.n else None

    def next(self) -> Token:
        if self.i >= self.n:
            last_line = self.toks[-1].line if self.toks else 1
            raise JavaParseError(self.path, last_line, "unexpected end of file")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            raise JavaParseError(self.path, t.line, f"expected '{text}', found '{t.text}'")
        return t

    def fail(self, message: str) -> JavaParseError:
        line = self.toks[min(self.i, self.n - 1)].line if self.toks else 1
        return JavaParseError(self.path, line, message)

    def at_word(self, *words: str) -> bool:
        t = self.peek()
        return t is not None and t.is_ident() and t.text in words

    # -- small grammar fragments -------------------------------------------

    def skip_annotations(self) -> None:
        while True:
            t = self.peek()
            if t is None or t.text != "@":
                return
            nxt = self.peek(1)
            if nxt is not None and nxt.is_ident() and nxt.text == "interface":
                return  # '@interface' is a type declaration, not an annotation
            self.next()  # '@'
            self.read_dotted_name()
            if self.peek() is not None and self.peek().text == "(":
                self.next()
                self.skip_balanced("(", ")")

    def skip_balanced(self, opener: str, closer: str) -> Token:
        """Cursor is just past one opener; consume through its closer."""
        depth = 1
        while True:
            t = self.next()
            if t.text == opener:
                depth += 1
            elif t.text == closer:
                depth -= 1
                if depth == 0:
                    return t

    def read_dotted_name(self) -> str:
        t = self.next()
        if not t.is_ident():
            raise JavaParseError(self.path, t.line, f"expected a name, found '{t.text}'")
        parts = [t.text]
        while True:
            dot = self.peek()
            nxt = self.peek(1)
            if dot is not None and dot.text == "." and nxt is not None and nxt.is_ident():
                self.next()
                parts.append(self.next().text)
            else:
                break
        return ".".join(parts)

    def try_angle_span(self, start: int) -> int | None:
        """If toks[start] == '<' opens a plausible generic argument list,
        return the index just past its '>'; otherwise None."""
        depth = 0
        j = start
        limit = start + 120
        while j < self.n and j < limit:
            t = self.toks[j]
            if t.text == "<":
                depth += 1
            elif t.text == ">":
                depth -= 1
                if depth == 0:
                    return j + 1
            elif t.is_ident():
                if t.text in KEYWORDS and t.text not in _ANGLE_OK_WORDS:
                    return None
            elif t.text not in _ANGLE_OK:
                return None
            j += 1
        return None

    def read_type_ref(self) -> tuple[str | None, set[str]]:
        """Read a type reference (dotted name, generics, array dims).

        Returns (base name or None for primitives, base names of generic
        arguments).  Cursor must be at the first token of the type.
        """
        refs: set[str] = set()
        t = self.peek()
        if t is None:
            raise self.fail("expected a type")
        if t.is_ident() and t.text in PRIMITIVES:
            self.next()
            base: str | None = None
        else:
            base = self.read_dotted_name()
        if self.peek() is not None and self.peek().text == "<":
            end = self.try_angle_span(self.i)
            if end is not None:
                refs |= self.collect_names(self.toks[self.i + 1 : end - 1])
                self.i = end
        while (
            self.peek() is not None
            and self.peek().text == "["
            and self.peek(1) is not None
            and self.peek(1).text == "]"
        ):
            self.next()
            self.next()
        return base, refs

    def collect_names(self, toks: list[Token]) -> set[str]:
        """Maximal dotted identifier chains in a token slice, keywords and
        primitives excluded.  Used on type-argument and header slices."""
        out: set[str] = set()
        j = 0
        while j < len(toks):
            t = toks[j]
            if t.is_ident() and t.text not in KEYWORDS and t.text not in PRIMITIVES:
                parts = [t.text]
                while (
                    j + 2 < len(toks)
                    and toks[j + 1].text == "."
                    and toks[j + 2].is_ident()
                ):
                    parts.append(toks[j + 2].text)
                    j += 2
                out.add(".".join(parts))
            j += 1
        return out

    def comment_lines_in(self, start: int, end: int) -> int:
        lo = bisect_left(self.comment_lines_sorted, start)
        hi = bisect_right(self.comment_lines_sorted, end)
        return hi - lo

    # -- compilation unit ---------------------------------------------------

    def parse_unit(self) -> list[ClassModel]:
        while self.peek() is not None:
            self.skip_annotations()
            t = self.peek()
            if t is None:
                break
            if t.text == ";":
                self.next()
                continue
            if t.is_ident() and t.text == "package":
                self.next()
                self.package_name = self.read_dotted_name()
                self.expect(";")
                continue
            if t.is_ident() and t.text == "import":
                self.next()
                while self.next().text != ";":
                    pass
                continue
            start_line = t.line
            self.skip_modifiers()
            self.skip_annotations()
            head = self.peek()
            if head is None:
                break
            if self.at_type_keyword():
                self.parse_type_decl("", start_line, fold_into=None)
            else:
                raise JavaParseError(
                    self.path, head.line, f"expected a type declaration, found '{head.text}'"
                )
        for model in self.models:
            _finalize(model)
        return self.models

    def skip_modifiers(self) -> None:
        while True:
            t = self.peek()
            if t is None:
                return
            if t.is_ident() and t.text in MODIFIERS:
                self.next()
                continue
            # 'non-sealed' lexes as three tokens
            if (
                t.is_ident()
                and t.text == "non"
                and self.peek(1) is not None
                and self.peek(1).text == "-"
                and self.peek(2) is not None
                and self.peek(2).text == "sealed"
            ):
                self.next()
                self.next()
                self.next()
                continue
            return

    def at_type_keyword(self) -> bool:
        t = self.peek()
        if t is None:
            return False
        if t.text == "@":
            nxt = self.peek(1)
            return nxt is not None and nxt.text == "interface"
        if not t.is_ident():
            return False
        if t.text in ("class", "interface", "enum"):
            return True
        if t.text == "record":
            nxt = self.peek(1)
            nxt2 = self.peek(2)
            return (
                nxt is not None
                and nxt.is_ident()
                and nxt2 is not None
                and nxt2.text in ("(", "<")
            )
        return False

    # -- type declarations ---------------------------------------------------

    def parse_type_decl(
        self, outer_local: str, start_line: int, fold_into: _BodyFacts | None
    ) -> None:
        """Parse a type declaration whose keyword is under the cursor.

        Named types register a ClassModel; when fold_into is given (local and
        anonymous contexts) the parsed members are merged into it instead.
        """
        t = self.next()
        if t.text == "@":
            self.next()  # 'interface'
            kind = "interface"
            is_annotation = True
            is_record = False
        else:
            is_annotation = False
            is_record = t.text == "record"
            kind = {"class": "class", "interface": "interface", "enum": "enum"}.get(
                t.text, "class"
            )
        name_tok = self.next()
        if not name_tok.is_ident():
            raise JavaParseError(self.path, name_tok.line, "expected a type name")
        local = f"{outer_local}.{name_tok.text}" if outer_local else name_tok.text
        qualified = f"{self.package_name}.{local}" if self.package_name else local
        model = ClassModel(qualified_name=qualified, package_name=self.package_name, kind=kind)
        if fold_into is None:
            self.models.append(model)

        if self.peek() is not None and self.peek().text == "<":
            end = self.try_angle_span(self.i)
            if end is not None:
                self.i = end
            else:
                self.next()
                self.skip_balanced("<", ">")
        if is_record and self.peek() is not None and self.peek().text == "(":
            self.next()
            refs, params = self.parse_parameters()
            model.referenced_type_names |= refs
            for pname, ptype in params:
                model.fields.append(FieldModel(pname, ptype))
        while self.at_word("extends", "implements", "permits"):
            clause = self.next().text
            while True:
                base, extra = self.read_type_ref()
                if clause == "extends":
                    if kind == "class":
                        model.superclass_name = base
                    else:
                        if base:
                            model.interface_names.append(base)
                elif clause == "implements":
                    if base:
                        model.interface_names.append(base)
                model.referenced_type_names |= extra
                if self.peek() is not None and self.peek().text == ",":
                    self.next()
                    continue
                break
        self.expect("{")
        end_tok = self.parse_class_body(model, local, enum_mode=(kind == "enum"), folded=fold_into is not None)
        if is_annotation:
            model.kind = "interface"
        model.loc_span = end_tok.line - start_line + 1
        model.comment_lines_in_span = self.comment_lines_in(start_line, end_tok.line)
        if fold_into is not None:
            _merge_folded_class(fold_into, model)

    def parse_class_body(
        self, model: ClassModel, local: str, enum_mode: bool, folded: bool
    ) -> Token:
        """Parse members until the matching '}'.  Returns the '}' token."""
        if enum_mode:
            self.parse_enum_constants(model)
        while True:
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in class body")
            if t.text == "}":
                return self.next()
            if t.text == ";":
                self.next()
                continue
            member_start = t.line
            self.skip_annotations()
            self.skip_modifiers()
            self.skip_annotations()
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in class body")
            if t.text == "{":  # static or instance initializer
                self.next()
                facts = _BodyFacts()
                self.scan_code(facts, brace_level=1)
                model.referenced_type_names |= facts.refs
                model.methods.extend(facts.folded_methods)
                continue
            if self.at_type_keyword():
                if folded:
                    inner = _BodyFacts()
                    self.parse_type_decl(local, member_start, fold_into=inner)
                    model.referenced_type_names |= inner.refs
                    model.methods.extend(inner.folded_methods)
                else:
                    self.parse_type_decl(local, member_start, fold_into=None)
                continue
            if t.text == "<":  # generic method type parameters
                end = self.try_angle_span(self.i)
                if end is not None:
                    self.i = end
                else:
                    self.next()
                    self.skip_balanced("<", ">")
            self.parse_member(model, member_start)

    def parse_enum_constants(self, model: ClassModel) -> None:
        while True:
            self.skip_annotations()
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in enum body")
            if t.text == "}":
                return
            if t.text == ";":
                self.next()
                return
            if t.text == ",":
                self.next()
                continue
            if not t.is_ident():
                raise JavaParseError(self.path, t.line, f"expected enum constant, found '{t.text}'")
            self.next()  # constant name
            if self.peek() is not None and self.peek().text == "(":
                self.next()
                facts = _BodyFacts()
                self.scan_code(facts, paren_level=1)
                model.referenced_type_names |= facts.refs
                model.methods.extend(facts.folded_methods)
            if self.peek() is not None and self.peek().text == "{":
                self.next()
                self.fold_anonymous_body(model)

    def fold_anonymous_body(self, model: ClassModel) -> None:
        """Parse a class body (cursor after '{') and fold it into model."""
        temp = ClassModel(qualified_name="<anonymous>", package_name=self.package_name, kind="class")
        self.parse_class_body(temp, "<anonymous>", enum_mode=False, folded=True)
        facts = _BodyFacts()
        _merge_folded_class(facts, temp)
        model.referenced_type_names |= facts.refs
        model.methods.extend(facts.folded_methods)

    def parse_member(self, model: ClassModel, member_start: int) -> None:
        """A field or a method/constructor (modifiers already consumed)."""
        header: list[Token] = []
        while True:
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in member declaration")
            if t.text == "@":
                self.skip_annotations()
                continue
            if t.text in ("(", "=", ";", ",", "{", "}"):
                break
            if t.text == "<":
                end = self.try_angle_span(self.i)
                if end is not None:
                    header.extend(self.toks[self.i : end])
                    self.i = end
                    continue
            header.append(self.next())
        stop = self.peek()
        if stop is None:
            raise self.fail("unexpected end of file in member declaration")
        if stop.text == "(" and header and header[-1].is_ident():
            self.parse_method(model, header, member_start)
        elif stop.text in ("=", ";", ","):
            self.parse_field(model, header)
        elif stop.text == "{" and len(header) == 1 and header[0].is_ident():
            # compact record constructor: Name { ... }
            self.next()
            facts = _BodyFacts()
            end = self.scan_code(facts, brace_level=1)
            model.methods.append(
                MethodModel(
                    name=header[0].text,
                    decision_points=facts.decision_points,
                    accessed_field_names=facts.accessed,
                    loc_span=end.line - member_start + 1,
                )
            )
            model.methods.extend(facts.folded_methods)
            model.referenced_type_names |= facts.refs
        else:
            raise JavaParseError(self.path, stop.line, f"unexpected '{stop.text}' in member declaration")

    def parse_method(self, model: ClassModel, header: list[Token], member_start: int) -> None:
        name = header[-1].text
        return_toks = header[:-1]
        model.referenced_type_names |= self.collect_names(return_toks)
        self.expect("(")
        refs, _params = self.parse_parameters()
        model.referenced_type_names |= refs
        if self.at_word("throws"):
            self.next()
            while True:
                self.read_dotted_name()
                if self.peek() is not None and self.peek().text == ",":
                    self.next()
                    continue
                break
        t = self.peek()
        if t is None:
            raise self.fail("unexpected end of file after method header")
        if t.text == ";":
            end = self.next()
            model.methods.append(
                MethodModel(name=name, decision_points=0, accessed_field_names=set(),
                            loc_span=end.line - member_start + 1)
            )
            return
        if t.is_ident() and t.text == "default":  # annotation member default
            self.next()
            facts = _BodyFacts()
            self.scan_code(facts, stop_semicolon=True)
            self.expect(";")
            model.referenced_type_names |= facts.refs
            end_line = self.toks[self.i - 1].line
            model.methods.append(
                MethodModel(name=name, decision_points=0, accessed_field_names=set(),
                            loc_span=end_line - member_start + 1)
            )
            return
        self.expect("{")
        facts = _BodyFacts()
        end = self.scan_code(facts, brace_level=1)
        model.methods.append(
            MethodModel(
                name=name,
                decision_points=facts.decision_points,
                accessed_field_names=facts.accessed,
                loc_span=end.line - member_start + 1,
            )
        )
        model.methods.extend(facts.folded_methods)
        model.referenced_type_names |= facts.refs

    def parse_parameters(self) -> tuple[set[str], list[tuple[str, str]]]:
        """Cursor after '('.  Returns (type refs, [(name, type base)])."""
        refs: set[str] = set()
        params: list[tuple[str, str]] = []
        group: list[Token] = []
        depth = 1
        while True:
            t = self.next()
            if t.text == "(":
                depth += 1
            elif t.text == ")":
                depth -= 1
                if depth == 0:
                    if group:
                        self._finish_param(group, refs, params)
                    return refs, params
            elif t.text == "," and depth == 1:
                self._finish_param(group, refs, params)
                group = []
                continue
            elif t.text == "@":
                # value-less annotation tokens would pollute the group
                self.read_dotted_name()
                if self.peek() is not None and self.peek().text == "(":
                    self.next()
                    self.skip_balanced("(", ")")
                continue
            group.append(t)

    def _finish_param(
        self, group: list[Token], refs: set[str], params: list[tuple[str, str]]
    ) -> None:
        toks = [t for t in group if t.text not in ("...",)]
        toks = [t for t in toks if not (t.is_ident() and t.text == "final")]
        while toks and toks[-1].text in ("[", "]"):
            toks.pop()
        if not toks:
            return
        name_tok = toks[-1]
        type_toks = toks[:-1]
        if not name_tok.is_ident() or name_tok.text in KEYWORDS:
            # receiver parameter ('this') or something exotic: types only
            refs |= self.collect_names(toks)
            return
        refs |= self.collect_names(type_toks)
        base = ""
        for t in type_toks:
            if t.is_ident() and t.text not in KEYWORDS:
                base = t.text
                break
            if t.is_ident() and t.text in PRIMITIVES:
                base = t.text
                break
        params.append((name_tok.text, base))

    def parse_field(self, model: ClassModel, header: list[Token]) -> None:
        """Field declarator list; header holds type tokens plus first name."""
        toks = list(header)
        while toks and toks[-1].text in ("[", "]"):
            toks.pop()
        if not toks or not toks[-1].is_ident() or len(toks) < 2:
            bad = self.peek()
            raise JavaParseError(self.path, bad.line if bad else 1, "malformed field declaration")
        name = toks[-1].text
        type_toks = toks[:-1]
        model.referenced_type_names |= self.collect_names(type_toks)
        base = ""
        for t in type_toks:
            if t.is_ident():
                base = t.text
                break
        model.fields.append(FieldModel(name, base))
        while True:
            t = self.next()
            if t.text == ";":
                return
            if t.text == "=":
                facts = _BodyFacts()
                self.scan_code(facts, stop_semicolon=True, stop_comma=True)
                model.referenced_type_names |= facts.refs
                model.methods.extend(facts.folded_methods)
                continue
            if t.text == ",":
                name_tok = self.next()
                if not name_tok.is_ident():
                    raise JavaParseError(self.path, name_tok.line, "expected field name")
                while (
                    self.peek() is not None
                    and self.peek().text == "["
                    and self.peek(1) is not None
                    and self.peek(1).text == "]"
                ):
                    self.next()
                    self.next()
                model.fields.append(FieldModel(name_tok.text, base))
                continue
            raise JavaParseError(self.path, t.line, f"unexpected '{t.text}' in field declaration")

    # -- body scanning --------------------------------------------------------

    def scan_code(
        self,
        facts: _BodyFacts,
        brace_level: int = 0,
        paren_level: int = 0,
        stop_semicolon: bool = False,
        stop_comma: bool = False,
    ) -> Token:
        """Scan statements/expressions until the open region closes.

        With brace_level/paren_level > 0, consumes through the token that
        closes the region and returns it.  With stop_semicolon/stop_comma,
        returns *before* a top-level ';' or ',' without consuming it.
        Collects decision points, accessed-field candidates, type
        references, and folded methods from anonymous/local classes.
        """
        braces = brace_level
        parens = paren_level
        prev: Token | None = None
        prev2: Token | None = None
        do_stack: list[int] = []
        anon_stack: list[int] = []
        decl_tails: list[tuple[int, int]] = []  # (paren depth, brace depth)

        def advance(consumed: Token) -> None:
            nonlocal prev, prev2
            prev2 = prev
            prev = consumed

        while True:
            t = self.peek()
            if t is None:
                raise self.fail("unexpected end of file in body")

            if parens == paren_level and braces == brace_level:
                if stop_semicolon and t.text == ";":
                    return t
                if stop_comma and t.text == ",":
                    return t

            # tentative local declaration: Type name
            at_decl_spot = prev is None or prev.text in (";", "{", "}", "(", ",", ":", "final")
            if (
                t.is_ident()
                and at_decl_spot
                and (t.text in PRIMITIVES or t.text not in KEYWORDS)
            ):
                decl = self.try_local_decl()
                if decl is not None:
                    type_refs, name_tok, end_index = decl
                    facts.refs |= type_refs
                    self.i = end_index
                    decl_tails.append((parens, braces))
                    advance(name_tok)
                    continue

            t = self.next()

            if t.kind in ("num", "str", "char"):
                advance(t)
                continue

            if t.text == "{":
                braces += 1
                advance(t)
                continue
            if t.text == "}":
                braces -= 1
                if brace_level > 0 and braces == brace_level - 1:
                    return t
                advance(t)
                continue
            if t.text == "(":
                parens += 1
                advance(t)
                continue
            if t.text == ")":
                parens -= 1
                if paren_level > 0 and parens == paren_level - 1:
                    return t
                while decl_tails and decl_tails[-1][0] > parens:
                    decl_tails.pop()
                if anon_stack and anon_stack[-1] == parens:
                    anon_stack.pop()
                    if self.peek() is not None and self.peek().text == "{":
                        self.next()
                        self.fold_anonymous_into(facts)
                advance(t)
                continue
            if t.text == ";":
                while decl_tails and decl_tails[-1][0] >= parens:
                    decl_tails.pop()
                advance(t)
                continue
            if t.text == ",":
                if decl_tails and decl_tails[-1] == (parens, braces):
                    nxt = self.peek()
                    if nxt is not None and nxt.is_ident() and nxt.text not in KEYWORDS:
                        self.next()
                        advance(nxt)
                        continue
                advance(t)
                continue
            if t.text in ("&&", "||"):
                facts.decision_points += 1
                advance(t)
                continue
            if t.text == "?":
                if prev is not None and (
                    prev.kind in ("num", "str", "char")
                    or (prev.is_ident() and prev.text not in KEYWORDS)
                    or prev.text in (")", "]")
                    or (prev.is_ident() and prev.text in ("this", "true", "false", "null"))
                ):
                    facts.decision_points += 1
                advance(t)
                continue

            if t.is_ident():
                word = t.text
                if word == "new":
                    advance(t)
                    nxt = self.peek()
                    if nxt is not None and (nxt.is_ident()):
                        base, extra = self.read_type_ref()
                        if base:
                            facts.refs.add(base)
                        facts.refs |= extra
                        if self.peek() is not None and self.peek().text == "(":
                            anon_stack.append(parens)
                        prev = Token("ident", base or "", t.line)
                    continue
                if word in ("if", "for", "catch", "case"):
                    facts.decision_points += 1
                    advance(t)
                    continue
                if word == "do":
                    facts.decision_points += 1
                    do_stack.append(braces)
                    advance(t)
                    continue
                if word == "while":
                    if (
                        prev is not None
                        and prev.text in ("}", ";")
                        and do_stack
                        and do_stack[-1] == braces
                    ):
                        do_stack.pop()
                    else:
                        facts.decision_points += 1
                    advance(t)
                    continue
                at_stmt_start = prev is None or prev.text in (";", "{", "}", "final", "static", "abstract")
                if at_stmt_start and (
                    word in ("class", "interface", "enum")
                    or (word == "record" and self.at_type_keyword_after_record(t))
                ):
                    # local type declaration: rewind to reuse parse_type_decl
                    self.i -= 1
                    inner = _BodyFacts()
                    self.parse_type_decl("<local>", t.line, fold_into=inner)
                    facts.refs |= inner.refs
                    facts.folded_methods.extend(inner.folded_methods)
                    advance(t)
                    continue
                if word == "@" or word in KEYWORDS:
                    advance(t)
                    continue
                # plain identifier
                nxt = self.peek()
                if prev is not None and prev.text == ".":
                    if (
                        prev2 is not None
                        and prev2.is_ident()
                        and prev2.text == "this"
                        and (nxt is None or nxt.text != "(")
                    ):
                        facts.accessed.add(word)
                    advance(t)
                    continue
                if nxt is not None and nxt.text == "(":
                    advance(t)
                    continue
                if nxt is not None and nxt.text == "." and word[0].isupper():
                    facts.refs.add(word)
                    facts.accessed.add(word)
                    advance(t)
                    continue
                facts.accessed.add(word)
                advance(t)
                continue

            if t.text == "@":
                # annotation in statement position (e.g. on a local decl)
                if self.peek() is not None and self.peek().is_ident():
                    self.read_dotted_name()
                    if self.peek() is not None and self.peek().text == "(":
                        self.next()
                        self.skip_balanced("(", ")")
                continue

            advance(t)

    def at_type_keyword_after_record(self, t: Token) -> bool:
        nxt = self.peek()
        nxt2 = self.peek(1)
        return (
            nxt is not None
            and nxt.is_ident()
            and nxt2 is not None
            and nxt2.text in ("(", "<")
        )

    def fold_anonymous_into(self, facts: _BodyFacts) -> None:
        temp = ClassModel(qualified_name="<anonymous>", package_name=self.package_name, kind="class")
        self.parse_class_body(temp, "<anonymous>", enum_mode=False, folded=True)
        _merge_folded_class(facts, temp)

    def try_local_decl(self) -> tuple[set[str], Token, int] | None:
        """Try to read 'Type name' at the cursor (not consuming on failure).

        Returns (type refs, declared-name token, index past the name) when
        the cursor sits on a local variable / for / resource declaration.
        """
        saved = self.i
        refs: set[str] = set()
        t = self.toks[saved]
        j = saved
        if t.text in PRIMITIVES:
            j += 1
        elif t.is_ident() and t.text not in KEYWORDS:
            parts = [t.text]
            j += 1
            while (
                j + 1 < self.n
                and self.toks[j].text == "."
                and self.toks[j + 1].is_ident()
                and self.toks[j + 1].text not in KEYWORDS
            ):
                parts.append(self.toks[j + 1].text)
                j += 2
            refs.add(".".join(parts))
        else:
            return None
        if j < self.n and self.toks[j].text == "<":
            end = self.try_angle_span(j)
            if end is None:
                return None
            refs |= self.collect_names(self.toks[j + 1 : end - 1])
            j = end
        # multi-catch alternatives: IOException | SQLException e
        while j < self.n and self.toks[j].text == "|":
            j += 1
            t2 = self.toks[j] if j < self.n else None
            if t2 is None or not t2.is_ident() or t2.text in KEYWORDS:
                return None
            parts2 = [t2.text]
            j += 1
            while (
                j + 1 < self.n
                and self.toks[j].text == "."
                and self.toks[j + 1].is_ident()
            ):
                parts2.append(self.toks[j + 1].text)
                j += 2
            refs.add(".".join(parts2))
        while j + 1 < self.n and self.toks[j].text == "[" and self.toks[j + 1].text == "]":
            j += 2
        if j >= self.n:
            return None
        name_tok = self.toks[j]
        if not name_tok.is_ident() or name_tok.text in KEYWORDS:
            return None
        j += 1
        if j >= self.n or self.toks[j].text not in ("=", ";", ",", ")", ":"):
            return None
        return refs, name_tok, j


def _merge_folded_class(target: _BodyFacts | ClassModel, folded: ClassModel) -> None:
    """Fold an anonymous/local class's facts into its host."""
    refs = set(folded.referenced_type_names)
    if folded.superclass_name:
        refs.add(folded.superclass_name)
    refs.update(folded.interface_names)
    refs.discard(folded.simple_name)
    if isinstance(target, _BodyFacts):
        target.refs |= refs
        target.folded_methods.extend(folded.methods)
    else:
        target.referenced_type_names |= refs
        target.methods.extend(folded.methods)


def _finalize(model: ClassModel) -> None:
    own = {model.simple_name, model.local_name, model.qualified_name}
    model.referenced_type_names -= own
    field_names = model.field_names()
    for m in model.methods:
        m.accessed_field_names &= field_names


def parse_unit(file: SourceFile) -> list[ClassModel]:
    """Parse one compilation unit into ClassModels, declaration order.

    Raises JavaParseError for irrecoverable syntax problems; callers skip
    the unit and log a diagnostic.  No partial models escape a failed unit.
    """
    scan = scan_text(file.text)
    if scan.errors:
        line, message = scan.errors[0]
        raise JavaParseError(file.path, line, message)
    parser = _Parser(file.path, scan)
    return parser.parse_unit()
