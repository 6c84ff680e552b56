"""Lexer invariants for both languages.

- Lossless round trip: concatenating token texts reproduces the source.
- Token positions are consistent with the source text.
- Comment and string forms are recognized, including nesting traps.
- Malformed input raises LexError with a line and column, never anything
  else.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from codeintl.errors import LexError
from codeintl.lexer import keywords_for, lex
from codeintl.tokens import CommentStyle, TokenKind, render

JAVA_SNIPPET = """\
/** Counts steps. */
public class Walker {
    private int stepCount = 0;  // total so far

    public void move() {
        stepCount++;
    }
}
"""

PYTHON_SNIPPET = '''\
"""Step counting."""


class Walker:
    def __init__(self):
        self.step_count = 0  # total so far

    def move(self):
        self.step_count += 1
'''


def kinds(tokens):
    return [t.kind for t in tokens]


def texts(tokens, kind):
    return [t.text for t in tokens if t.kind == kind]


def test_java_round_trip():
    assert render(lex(JAVA_SNIPPET, "java")) == JAVA_SNIPPET


def test_python_round_trip():
    assert render(lex(PYTHON_SNIPPET, "python")) == PYTHON_SNIPPET


def test_java_token_kinds():
    tokens = lex(JAVA_SNIPPET, "java")
    assert "public" in texts(tokens, TokenKind.KEYWORD)
    assert "0" in texts(tokens, TokenKind.NUMBER)
    comments = [t for t in tokens if t.kind == TokenKind.COMMENT]
    assert [c.style for c in comments] == [CommentStyle.JAVADOC, CommentStyle.LINE]


def test_python_docstring_is_a_comment_token():
    tokens = lex(PYTHON_SNIPPET, "python")
    comments = [t for t in tokens if t.kind == TokenKind.COMMENT]
    assert comments[0].style == CommentStyle.DOCSTRING
    assert comments[0].text == '"""Step counting."""'
    assert comments[1].style == CommentStyle.LINE


def test_python_string_in_expression_position_is_not_a_docstring():
    tokens = lex('x = "not a docstring"\n', "python")
    assert texts(tokens, TokenKind.STRING_LITERAL) == ['"not a docstring"']
    assert texts(tokens, TokenKind.COMMENT) == []


def test_java_string_with_escapes_and_comment_lookalike():
    source = 'String s = "a // not a comment \\" still";\n'
    tokens = lex(source, "java")
    assert len(texts(tokens, TokenKind.STRING_LITERAL)) == 1
    assert texts(tokens, TokenKind.COMMENT) == []
    assert render(tokens) == source


def test_java_char_literals():
    source = "char a = '\\''; char b = '\\\\'; char c = 'x';\n"
    tokens = lex(source, "java")
    assert len(texts(tokens, TokenKind.STRING_LITERAL)) == 3
    assert render(tokens) == source


def test_python_fstring_with_nested_braces():
    source = 'msg = f"count={count:{width}d}"\n'
    tokens = lex(source, "python")
    assert render(tokens) == source


def test_python_triple_quote_with_embedded_quotes():
    source = 's = """one " two "" three"""\n'
    tokens = lex(source, "python")
    assert len(texts(tokens, TokenKind.STRING_LITERAL)) == 1
    assert render(tokens) == source


def test_block_comment_does_not_nest():
    source = "/* outer /* inner */ int x;\n"
    tokens = lex(source, "java")
    assert texts(tokens, TokenKind.COMMENT) == ["/* outer /* inner */"]


def test_unterminated_block_comment_reports_position():
    with pytest.raises(LexError) as err:
        lex("int a;\n  /* runs off", "java")
    assert "unterminated block comment" in str(err.value)
    assert "line 2, column 3" in str(err.value)


def test_unterminated_string_reports_position():
    with pytest.raises(LexError) as err:
        lex('s = "open\n', "python")
    assert "unterminated string literal" in str(err.value)


def test_unterminated_triple_quote():
    with pytest.raises(LexError) as err:
        lex('s = """open\nmore\n', "python")
    assert "unterminated triple-quoted string" in str(err.value)


def test_unexpected_character():
    with pytest.raises(LexError):
        lex("int a = 1 \x00;\n", "java")


def test_unicode_identifiers_lex_as_identifiers():
    tokens = lex("int 计数 = 0;\n", "java")
    ident_kinds = (TokenKind.TARGET_IDENTIFIER, TokenKind.IMMUTABLE_IDENTIFIER)
    names = [t.text for t in tokens if t.kind in ident_kinds]
    assert names == ["计数"]


def test_keywords_differ_by_language():
    assert "class" in keywords_for("java")
    assert "def" not in keywords_for("java")
    assert "def" in keywords_for("python")
    assert "lambda" in keywords_for("python")


def test_token_positions_match_source():
    source = "int a;\nint b;\n"
    for tok in lex(source, "java"):
        lines = source.split("\n")
        fragment = lines[tok.line - 1][tok.col - 1:tok.col - 1 + len(tok.text)]
        if "\n" not in tok.text:
            assert fragment == tok.text


# Source fragments built only from pieces the lexer must survive.
_JAVA_PIECES = st.sampled_from([
    "int x = 1;", "// note\n", "/* block */", "\"text\"", "'c'",
    "if (x > 0) {", "}", "\n", "    ", "x += 2;", "move();",
    "String s = \"a\\\"b\";", "counter--;", "@Override", "0x1F", "1.5e3",
])
_PY_PIECES = st.sampled_from([
    "x = 1\n", "# note\n", '"""doc"""\n', "'text'", "if x > 0:\n",
    "    pass\n", "\n", "x += 2\n", "move()\n", "s = 'a\\'b'\n",
    "f'{x}'\n", "y = [1, 2]\n", "0x1f\n", "1.5e3\n", "del x\n",
])


@given(st.lists(_JAVA_PIECES, min_size=1, max_size=12))
@settings(max_examples=200)
def test_java_fragment_round_trip(pieces):
    source = "".join(pieces)
    assert render(lex(source, "java")) == source


@given(st.lists(_PY_PIECES, min_size=1, max_size=12))
@settings(max_examples=200)
def test_python_fragment_round_trip(pieces):
    source = "".join(pieces)
    assert render(lex(source, "python")) == source


@given(st.text(min_size=0, max_size=60))
@settings(max_examples=300)
def test_lexer_never_crashes_and_round_trips_when_it_accepts(text):
    for lang in ("java", "python"):
        try:
            tokens = lex(text, lang)
        except LexError:
            continue
        assert render(tokens) == text
