"""Token model shared by the Java and Python lexers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .widths import display_width


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    TARGET_IDENTIFIER = "target_identifier"
    IMMUTABLE_IDENTIFIER = "immutable_identifier"
    COMMENT = "comment"
    STRING_LITERAL = "string_literal"
    NUMBER = "number"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    WHITESPACE = "whitespace"
    NEWLINE = "newline"


# Kinds whose text is allowed to differ between a source file and its
# translation. Everything else must be byte-for-byte identical.
RENAMABLE_KINDS = frozenset(
    {TokenKind.TARGET_IDENTIFIER, TokenKind.COMMENT, TokenKind.STRING_LITERAL}
)

IDENTIFIER_KINDS = frozenset(
    {TokenKind.TARGET_IDENTIFIER, TokenKind.IMMUTABLE_IDENTIFIER}
)

# Kinds that carry no syntactic weight when scanning for declarations.
TRIVIA_KINDS = frozenset(
    {TokenKind.WHITESPACE, TokenKind.NEWLINE, TokenKind.COMMENT}
)


class CommentStyle(enum.Enum):
    LINE = "line"
    BLOCK = "block"
    JAVADOC = "javadoc"
    DOCSTRING = "docstring"


@dataclass(frozen=True, slots=True)
class SourceToken:
    """One lossless slice of an input file.

    Concatenating the ``text`` of every token of a file reproduces the file
    exactly; whitespace and newlines are tokens like any other.
    """

    kind: TokenKind
    text: str
    line: int  # 1-based line of the first character
    col: int   # 1-based display column of the first character
    style: CommentStyle | None = None  # set for comments only
    is_definition: bool = False        # identifier appears at its declaration

    @property
    def width(self) -> int:
        return display_width(self.text)

    def with_text(self, text: str) -> "SourceToken":
        return replace(self, text=text)

    def with_kind(self, kind: TokenKind, definition: bool = False) -> "SourceToken":
        return replace(self, kind=kind, is_definition=definition)


@dataclass
class SymbolTable:
    """Names declared in a file set, with the role seen at first declaration.

    ``defined`` preserves first-appearance order (dict insertion order);
    classification is by name only, so shadowing and scoping are ignored:
    one name gets one classification everywhere it occurs.
    """

    defined: dict[str, str] = field(default_factory=dict)  # name -> role
    external: set[str] = field(default_factory=set)

    def declare(self, name: str, role: str) -> None:
        self.defined.setdefault(name, role)

    def merge(self, other: "SymbolTable") -> None:
        for name, role in other.defined.items():
            self.declare(name, role)
        self.external |= other.external
        self.external -= set(self.defined)


# Roles attached to declared names; only METHOD changes behaviour (verb
# prior), the rest are informational.
ROLE_METHOD = "method"
ROLE_CLASS = "class"
ROLE_VARIABLE = "variable"
ROLE_CONSTANT = "constant"


def render(tokens: list[SourceToken]) -> str:
    """Inverse of lexing: join token texts back into file content."""
    return "".join(t.text for t in tokens)
