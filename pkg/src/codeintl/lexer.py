"""Lossless lexers for Java and Python source.

Both lexers emit a flat token stream whose texts concatenate back to the
input byte-for-byte. They do not build a parse tree; downstream passes only
need token kinds, which is what makes the translation structure-safe: a
renamed program re-lexes to the same kind sequence.
"""

from __future__ import annotations

import keyword
import re

from .errors import LexError
from .tokens import CommentStyle, SourceToken, TokenKind
from .widths import display_width

JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null var
    """.split()
)

PYTHON_KEYWORDS = frozenset(keyword.kwlist)

# Primitive-ish keywords that can open a Java declaration's type.
JAVA_TYPE_KEYWORDS = frozenset(
    "boolean byte char double float int long short".split()
)

_JAVA_RE = re.compile(
    r"""
    (?P<COMMENT>//[^\n\r]*|/\*[\s\S]*?\*/)
   |(?P<STRING>"(?:\\.|[^"\\\r\n])*"|'(?:\\.|[^'\\\r\n])+')
   |(?P<NUMBER>0[xX][0-9a-fA-F][0-9a-fA-F_]*[lL]?
        |0[bB][01][01_]*[lL]?
        |(?:\d[\d_]*\.[\d_]*(?:[eE][+-]?\d+)?
          |\.\d[\d_]*(?:[eE][+-]?\d+)?
          |\d[\d_]*(?:[eE][+-]?\d+)?)[fFdDlL]?)
   |(?P<IDENT>(?:[^\W\d]|\$)[\w$]*)
   |(?P<NEWLINE>\r\n|\r|\n)
   |(?P<WS>[ \t\f]+)
   |(?P<PUNCT>\.\.\.|::|[(){}\[\];,.@])
   |(?P<OP>>>>=|>>>|>>=|<<=|->|\+\+|--|&&|\|\||[-+*/%&|^!=<>]=|<<|>>
        |[-+*/%=<>!~&|^?:])
    """,
    re.VERBOSE,
)

_PY_RE = re.compile(
    r"""
    (?P<COMMENT>\#[^\n\r]*)
   |(?P<STRING>[rRbBuUfF]{0,3}
        (?:'''[\s\S]*?'''|\"\"\"[\s\S]*?\"\"\"
          |'(?:\\.|[^'\\\r\n])*'|"(?:\\.|[^"\\\r\n])*"))
   |(?P<NUMBER>0[xX][0-9a-fA-F_]+|0[oO][0-7_]+|0[bB][01_]+
        |(?:\d[\d_]*\.[\d_]*|\.\d[\d_]*|\d[\d_]*)(?:[eE][+-]?\d+)?[jJ]?)
   |(?P<IDENT>[^\W\d]\w*)
   |(?P<NEWLINE>\r\n|\r|\n)
   |(?P<WS>(?:[ \t\f]|\\\r?\n)+)
   |(?P<PUNCT>\.\.\.|->|[()\[\]{};,.])
   |(?P<OP>\*\*=|//=|<<=|>>=|:=|==|!=|<=|>=|\*\*|//|<<|>>
        |[-+*/%&|^@]=|[-+*/%=<>&|^~@:])
    """,
    re.VERBOSE,
)

_GROUP_KIND = {
    "COMMENT": TokenKind.COMMENT,
    "STRING": TokenKind.STRING_LITERAL,
    "NUMBER": TokenKind.NUMBER,
    "IDENT": TokenKind.IMMUTABLE_IDENTIFIER,  # provisional; refined later
    "NEWLINE": TokenKind.NEWLINE,
    "WS": TokenKind.WHITESPACE,
    "PUNCT": TokenKind.PUNCTUATION,
    "OP": TokenKind.OPERATOR,
}

_TRIPLE_QUOTE_RE = re.compile(r"^[rRbBuUfF]{0,3}('''|\"\"\")")


def _comment_style_java(text: str) -> CommentStyle:
    if text.startswith("//"):
        return CommentStyle.LINE
    if text.startswith("/**") and len(text) > 4:
        return CommentStyle.JAVADOC
    return CommentStyle.BLOCK


def _fail(source: str, pos: int, line: int, col: int) -> None:
    rest = source[pos:]
    if rest.startswith("/*"):
        raise LexError("unterminated block comment", line, col)
    if rest[:6].lstrip("rRbBuUfF").startswith(("'''", '"""')):
        raise LexError("unterminated triple-quoted string", line, col)
    if rest.startswith(('"', "'")):
        raise LexError("unterminated string literal", line, col)
    raise LexError(f"unexpected character {rest[0]!r}", line, col)


def _scan(source: str, pattern: re.Pattern, lang: str) -> list[SourceToken]:
    tokens: list[SourceToken] = []
    keywords = JAVA_KEYWORDS if lang == "java" else PYTHON_KEYWORDS
    pos, line, col = 0, 1, 1
    n = len(source)
    while pos < n:
        m = pattern.match(source, pos)
        if m is None:
            _fail(source, pos, line, col)
        group = m.lastgroup
        text = m.group()
        kind = _GROUP_KIND[group]
        style = None
        if kind is TokenKind.COMMENT:
            style = _comment_style_java(text) if lang == "java" else CommentStyle.LINE
        elif kind is TokenKind.IMMUTABLE_IDENTIFIER and text in keywords:
            kind = TokenKind.KEYWORD
        # An unterminated /* would otherwise fall through to the '/' operator.
        if lang == "java" and text == "/" and source.startswith("/*", pos):
            raise LexError("unterminated block comment", line, col)
        # An unterminated ''' would otherwise shrink to an empty short string.
        if (lang == "python" and kind is TokenKind.STRING_LITERAL
                and _TRIPLE_QUOTE_RE.match(source[pos:pos + 6])
                and not _TRIPLE_QUOTE_RE.match(text)):
            raise LexError("unterminated triple-quoted string", line, col)
        tokens.append(SourceToken(kind, text, line, col, style=style))
        pos = m.end()
        nl = text.count("\n") + (text.count("\r") - text.count("\r\n"))
        if nl:
            line += nl
            tail = re.split(r"\r\n|\r|\n", text)[-1]
            col = 1 + display_width(tail)
        else:
            col += display_width(text)
    return tokens


def _mark_python_docstrings(tokens: list[SourceToken]) -> list[SourceToken]:
    """Re-kind triple-quoted strings in docstring position as comments.

    A docstring here is a triple-quoted string that starts a logical line
    and whose previous significant token is a ':' (start of a suite) or
    nothing at all (module docstring). This is a token-level approximation
    of the grammar rule, good enough for statement-shaped files.
    """
    out = list(tokens)
    prev_sig: SourceToken | None = None
    at_line_start = True
    for i, tok in enumerate(out):
        if tok.kind is TokenKind.NEWLINE:
            at_line_start = True
            continue
        if tok.kind is TokenKind.WHITESPACE:
            continue
        if tok.kind is TokenKind.COMMENT:
            at_line_start = True  # a comment line does not start a statement
            continue
        if (
            tok.kind is TokenKind.STRING_LITERAL
            and at_line_start
            and _TRIPLE_QUOTE_RE.match(tok.text)
            and (prev_sig is None or prev_sig.text == ":")
        ):
            out[i] = SourceToken(
                TokenKind.COMMENT, tok.text, tok.line, tok.col,
                style=CommentStyle.DOCSTRING,
            )
            prev_sig = tok
            at_line_start = False
            continue
        prev_sig = tok
        at_line_start = False
    return out


def lex(source: str, lang: str) -> list[SourceToken]:
    """Tokenize ``source`` for ``lang`` ('java' or 'python').

    Raises LexError with position on unterminated strings/comments or
    characters outside the language's alphabet.
    """
    if lang == "java":
        return _scan(source, _JAVA_RE, "java")
    if lang == "python":
        return _mark_python_docstrings(_scan(source, _PY_RE, "python"))
    raise ValueError(f"unsupported language: {lang!r}")


def keywords_for(lang: str) -> frozenset[str]:
    return JAVA_KEYWORDS if lang == "java" else PYTHON_KEYWORDS
