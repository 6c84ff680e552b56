"""Declaration scanning: which identifiers does a file set define?

A lightweight token-pattern scan, not a parse. Names it recognizes as
declared become renamable; everything else stays immutable, so a miss is
always safe: an unrecognized name is simply never renamed. Classification
is by name: one name gets one kind everywhere it appears, shadowing and
scoping deliberately ignored.
"""

from __future__ import annotations

from .lexer import JAVA_TYPE_KEYWORDS
from .tokens import (
    IDENTIFIER_KINDS,
    ROLE_CLASS,
    ROLE_METHOD,
    ROLE_VARIABLE,
    SourceToken,
    SymbolTable,
    TokenKind,
    TRIVIA_KINDS,
)

# Modifiers that may directly precede a Java method or constructor name.
_JAVA_MODIFIERS = frozenset(
    "public private protected static final synchronized native abstract default strictfp".split()
)

# Conventional Python receiver names; renaming them is legal but reads
# badly, so they are left undeclared (hence immutable).
_PYTHON_RECEIVERS = frozenset({"self", "cls"})


def _is_dunder(name: str) -> bool:
    """Protocol names like __init__ must keep their spelling."""
    return len(name) > 4 and name.startswith("__") and name.endswith("__")


def _significant(tokens: list[SourceToken]) -> list[int]:
    return [i for i, t in enumerate(tokens) if t.kind not in TRIVIA_KINDS]


class _JavaScan:
    def __init__(self, tokens: list[SourceToken]):
        self.tokens = tokens
        self.sig = _significant(tokens)
        self.table = SymbolTable()
        self.decl_sites: set[int] = set()

    def _tok(self, j: int) -> SourceToken | None:
        if 0 <= j < len(self.sig):
            return self.tokens[self.sig[j]]
        return None

    def _declare(self, j: int, role: str) -> None:
        tok = self._tok(j)
        if tok is not None and tok.kind in IDENTIFIER_KINDS:
            self.table.declare(tok.text, role)
            self.decl_sites.add(self.sig[j])

    def _match_type(self, j: int) -> int | None:
        """Try to read a type starting at sig index j; return index after it."""
        tok = self._tok(j)
        if tok is None:
            return None
        if tok.kind is TokenKind.KEYWORD and tok.text in JAVA_TYPE_KEYWORDS:
            j += 1
        elif tok.kind in IDENTIFIER_KINDS:
            j += 1
            # qualified name: java.util.List
            while True:
                dot, name = self._tok(j), self._tok(j + 1)
                if dot is not None and dot.text == "." and name is not None \
                        and name.kind in IDENTIFIER_KINDS:
                    j += 2
                else:
                    break
        else:
            return None
        nxt = self._tok(j)
        if nxt is not None and nxt.text == "<":
            j = self._match_generics(j)
            if j is None:
                return None
        while True:
            a, b = self._tok(j), self._tok(j + 1)
            if a is not None and a.text == "[" and b is not None and b.text == "]":
                j += 2
            else:
                break
        nxt = self._tok(j)
        if nxt is not None and nxt.text == "...":
            j += 1
        return j

    def _match_generics(self, j: int) -> int | None:
        """Consume a balanced <...> group; None if it cannot be one."""
        depth = 0
        allowed_text = {",", ".", "?", "<", ">", ">>", ">>>", "[", "]", "&"}
        allowed_kw = {"extends", "super"} | JAVA_TYPE_KEYWORDS
        while True:
            tok = self._tok(j)
            if tok is None:
                return None
            if tok.text == "<":
                depth += 1
            elif tok.text in (">", ">>", ">>>"):
                depth -= len(tok.text)
                if depth <= 0:
                    return j + 1
            elif tok.kind in IDENTIFIER_KINDS:
                pass
            elif tok.kind is TokenKind.KEYWORD and tok.text in allowed_kw:
                pass
            elif tok.text in allowed_text:
                pass
            else:
                return None  # expression territory: a < b && ...
            j += 1

    def _scan_enum_body(self, j: int) -> None:
        """Declare enum constants between the opening '{' and the first ';'."""
        tok = self._tok(j)
        while tok is not None and tok.text != "{":
            if tok.text in (";", "}"):
                return
            j += 1
            tok = self._tok(j)
        if tok is None:
            return
        j += 1
        expect_name = True
        depth = 0
        while True:
            tok = self._tok(j)
            if tok is None:
                return
            if depth == 0:
                if tok.text in (";", "}"):
                    return
                if expect_name and tok.kind in IDENTIFIER_KINDS:
                    self._declare(j, ROLE_VARIABLE)
                    expect_name = False
                elif tok.text == ",":
                    expect_name = True
            if tok.text in ("(", "{", "["):
                depth += 1
            elif tok.text in (")", "}", "]"):
                depth -= 1
                if depth < 0:
                    return
            j += 1

    def run(self) -> tuple[SymbolTable, set[int]]:
        j = 0
        while j < len(self.sig):
            tok = self._tok(j)
            if tok.kind is TokenKind.KEYWORD and tok.text in ("class", "interface", "enum"):
                self._declare(j + 1, ROLE_CLASS)
                if tok.text == "enum":
                    self._scan_enum_body(j + 2)
                j += 2
                continue
            is_type_kw = (
                tok.kind is TokenKind.KEYWORD and tok.text in JAVA_TYPE_KEYWORDS)
            if tok.kind in IDENTIFIER_KINDS or is_type_kw:
                nxt = self._tok(j + 1)
                prev = self._tok(j - 1)
                if tok.kind in IDENTIFIER_KINDS and nxt is not None \
                        and nxt.text == "(" and prev is not None and (
                    prev.kind in IDENTIFIER_KINDS
                    or prev.text in JAVA_TYPE_KEYWORDS
                    or prev.text == "void"
                    or prev.text in _JAVA_MODIFIERS
                    or prev.text in (">", ">>", ">>>", "]")
                ):
                    self._declare(j, ROLE_METHOD)
                    j += 1
                    continue
                end = self._match_type(j)
                if end is not None and end > j:
                    name = self._tok(end)
                    follow = self._tok(end + 1)
                    if (
                        name is not None
                        and name.kind in IDENTIFIER_KINDS
                        and follow is not None
                        and follow.text in ("=", ";", ",", ":", ")", "[")
                    ):
                        self._declare(end, ROLE_VARIABLE)
                        self._scan_more_declarators(end + 1)
            j += 1
        return self.table, self.decl_sites

    def _scan_more_declarators(self, j: int) -> None:
        """Handle ``int a = 1, b, c = 2;``, names after top-level commas."""
        depth = 0
        while True:
            tok = self._tok(j)
            if tok is None:
                return
            if depth == 0 and tok.text in (";", ")", "}"):
                return
            if tok.text in ("(", "[", "{"):
                depth += 1
            elif tok.text in (")", "]", "}"):
                depth -= 1
                if depth < 0:
                    return
            elif depth == 0 and tok.text == ",":
                name = self._tok(j + 1)
                follow = self._tok(j + 2)
                if (
                    name is not None
                    and name.kind in IDENTIFIER_KINDS
                    and follow is not None
                    and follow.text in ("=", ";", ",")
                ):
                    self._declare(j + 1, ROLE_VARIABLE)
                else:
                    return  # a comma that is not a declarator list (generics, calls)
            j += 1


class _PythonScan:
    def __init__(self, tokens: list[SourceToken]):
        self.tokens = tokens
        self.sig = _significant(tokens)
        self.table = SymbolTable()
        self.decl_sites: set[int] = set()

    def _tok(self, j: int) -> SourceToken | None:
        if 0 <= j < len(self.sig):
            return self.tokens[self.sig[j]]
        return None

    def _declare(self, j: int, role: str) -> None:
        tok = self._tok(j)
        if (
            tok is not None
            and tok.kind in IDENTIFIER_KINDS
            and tok.text not in _PYTHON_RECEIVERS
            and not _is_dunder(tok.text)
        ):
            self.table.declare(tok.text, role)
            self.decl_sites.add(self.sig[j])

    def _line_starts(self) -> set[int]:
        """Sig indexes that begin a logical line (after NEWLINE or ';')."""
        starts: set[int] = set()
        fresh = True
        for j, i in enumerate(self.sig):
            if fresh:
                starts.add(j)
                fresh = False
            if self.tokens[i].text == ";" or self._newline_after(i):
                fresh = True
        return starts

    def _newline_after(self, i: int) -> bool:
        for t in self.tokens[i + 1:]:
            if t.kind is TokenKind.NEWLINE:
                return True
            if t.kind is TokenKind.WHITESPACE or t.kind is TokenKind.COMMENT:
                continue
            return False
        return True

    def _scan_params(self, j: int) -> int:
        """Declare parameter names in a def's parens; j points at '('."""
        depth = 0
        expect_name = False
        while True:
            tok = self._tok(j)
            if tok is None:
                return j
            if tok.text in ("(", "[", "{"):
                depth += 1
                if depth == 1:
                    expect_name = True
                j += 1
                continue
            if tok.text in (")", "]", "}"):
                depth -= 1
                if depth == 0:
                    return j + 1
                j += 1
                continue
            if depth == 1:
                if expect_name:
                    if tok.text in ("*", "**", "/"):
                        j += 1
                        continue
                    if tok.kind in IDENTIFIER_KINDS:
                        self._declare(j, ROLE_VARIABLE)
                    expect_name = False
                elif tok.text == ",":
                    expect_name = True
            j += 1

    def _scan_assignment(self, j: int) -> None:
        """Declare simple-assignment targets at a logical line start.

        Handles ``a = ...``, ``a, b = ...``, ``(a, b) = ...``, ``a = b = ...``
        and annotated ``a: T = ...``. Attribute or subscript targets abort
        the group, leaving those names untouched.
        """
        while True:
            names: list[int] = []
            k = j
            group_ok = False
            while True:
                tok = self._tok(k)
                if tok is None:
                    break
                if tok.kind in IDENTIFIER_KINDS:
                    names.append(k)
                elif tok.text in (",", "(", ")", "*"):
                    pass
                elif tok.text == ":" and names:
                    # annotated target: skip the annotation up to '=' or EOL
                    k += 1
                    depth = 0
                    while True:
                        t2 = self._tok(k)
                        if t2 is None:
                            break
                        if t2.text in ("(", "[", "{"):
                            depth += 1
                        elif t2.text in (")", "]", "}"):
                            depth -= 1
                        elif depth == 0 and (t2.text == "=" or self._ends_line(k)):
                            break
                        k += 1
                    tok = self._tok(k)
                    break
                else:
                    break
                if self._ends_line(k):
                    tok = None
                    break
                k += 1
                tok = self._tok(k)
            if tok is not None and tok.text == "=" and names:
                group_ok = True
            if not group_ok:
                return
            for idx in names:
                self._declare(idx, ROLE_VARIABLE)
            j = k + 1  # look for a chained ``b = ...`` after the '='

    def _ends_line(self, j: int) -> bool:
        return self._newline_after(self.sig[j])

    def run(self) -> tuple[SymbolTable, set[int]]:
        starts = self._line_starts()
        skip_line_kw = {"import", "from", "global", "nonlocal", "del"}
        j = 0
        while j < len(self.sig):
            tok = self._tok(j)
            if tok.kind is TokenKind.KEYWORD:
                if tok.text == "def":
                    self._declare(j + 1, ROLE_METHOD)
                    nxt = self._tok(j + 2)
                    if nxt is not None and nxt.text == "(":
                        j = self._scan_params(j + 2)
                        continue
                elif tok.text == "class":
                    self._declare(j + 1, ROLE_CLASS)
                elif tok.text == "for":
                    k = j + 1
                    while True:
                        t2 = self._tok(k)
                        if t2 is None or (t2.kind is TokenKind.KEYWORD and t2.text == "in"):
                            break
                        if t2.kind in IDENTIFIER_KINDS:
                            self._declare(k, ROLE_VARIABLE)
                        elif t2.text not in (",", "(", ")", "*", "[", "]"):
                            break
                        k += 1
                elif tok.text in skip_line_kw:
                    while not self._ends_line(j):
                        j += 1
            elif tok.kind in IDENTIFIER_KINDS:
                nxt = self._tok(j + 1)
                if nxt is not None and nxt.text == ":=":
                    self._declare(j, ROLE_VARIABLE)
                elif j in starts:
                    prev = self._tok(j - 1)
                    if prev is None or prev.text != ".":
                        self._scan_assignment(j)
            j += 1
        return self.table, self.decl_sites


def scan_declarations(tokens: list[SourceToken], lang: str) -> tuple[SymbolTable, set[int]]:
    """Collect declared names and the token indexes of their declaration sites."""
    scanner = _JavaScan(tokens) if lang == "java" else _PythonScan(tokens)
    return scanner.run()


def classify_identifiers(
    tokens: list[SourceToken],
    lang: str,
    table: SymbolTable | None = None,
) -> tuple[list[SourceToken], SymbolTable]:
    """Split identifier tokens into renamable targets and immutable names.

    With ``table`` given (e.g. the union over a multi-file job), names are
    classified against it; otherwise the file's own declarations are used.
    Unresolved names default to immutable, the conservative direction.
    """
    own_table, decl_sites = scan_declarations(tokens, lang)
    if table is None:
        table = own_table
    else:
        # keep roles discovered here for names the union table already has
        for name, role in own_table.defined.items():
            table.declare(name, role)
    out: list[SourceToken] = []
    for i, tok in enumerate(tokens):
        if tok.kind in IDENTIFIER_KINDS:
            if tok.text in table.defined:
                out.append(tok.with_kind(
                    TokenKind.TARGET_IDENTIFIER, definition=i in decl_sites))
            else:
                out.append(tok.with_kind(TokenKind.IMMUTABLE_IDENTIFIER))
                table.external.add(tok.text)
        else:
            out.append(tok)
    return out, table
