"""Comment translation: classify, strip, translate, reflow, re-render.

A comment's decoration (``//``, ``*`` margins, ``\"\"\"`` quotes) is
structure and must survive translation; its text is stripped out, sent to
the backend with identifier references protected, and wrapped back so that
no rendered line is wider (in display cells) than the original comment's
widest line. A comment whose text the backend leaves unchanged is returned
byte-for-byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .backends import TranslationBackend
from .tokens import CommentStyle, SourceToken, TokenKind
from .translit import transliterate_text
from .widths import char_width, display_width

# Tags whose first argument is an identifier that must follow the renaming.
_SLOT_TAGS = frozenset({"param", "throws", "exception"})

_SENTINEL = "\x02{}\x02"
_SENTINEL_RE = re.compile("\x02(\\d+)\x02")
_TAG_RE = re.compile(r"@(\w+)[ \t]*(.*)$")
_STAR_MARGIN_RE = re.compile(r"^[ \t]*\*(?!/)[ \t]?")
_WORD_BOUNDARY = r"(?<![\w$]){}(?![\w$])"


@dataclass
class Piece:
    """One translatable unit of a comment: a paragraph or a tag line."""

    kind: str                 # "para" | "tag" | "blank"
    text: str = ""            # translatable text (tag: the description)
    tag: str = ""             # tag name without '@'
    slot: str = ""            # identifier argument of @param-like tags


@dataclass
class CommentBlock:
    """A classified comment plus everything needed to re-render it."""

    style: CommentStyle
    token: SourceToken
    lines: list[str]          # raw token text split on newlines
    pieces: list[Piece]
    margin: str               # continuation-line decoration
    max_width: int            # widest original line, in display cells
    opener: str = ""          # "//", "#", "/*", "/**" or docstring quotes
    closer_ws: str = ""       # leading whitespace of the closing line
    first_inline: bool = False   # text on the opener line
    closer_own_line: bool = True
    prefix: str = ""          # line comments: delimiter plus its spacing
    translated: list[Piece] | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        return "\n".join(p.text for p in self.pieces if p.kind != "blank")


def _line_widths(token: SourceToken, lines: list[str]) -> int:
    widths = []
    for i, line in enumerate(lines):
        w = display_width(line.rstrip("\r"))
        if i == 0:
            w += token.col - 1
        widths.append(w)
    return max(widths)


def _split_paragraphs(content_lines: list[str]) -> list[Piece]:
    pieces: list[Piece] = []
    current: list[str] = []

    def flush() -> None:
        if current:
            pieces.append(Piece("para", " ".join(current)))
            current.clear()

    for line in content_lines:
        stripped = line.strip()
        if not stripped:
            flush()
            pieces.append(Piece("blank"))
            continue
        m = _TAG_RE.match(stripped)
        if m:
            flush()
            tag, rest = m.group(1), m.group(2).strip()
            slot = ""
            if tag in _SLOT_TAGS:
                parts = rest.split(None, 1)
                if parts:
                    slot = parts[0]
                    rest = parts[1] if len(parts) > 1 else ""
            pieces.append(Piece("tag", rest, tag=tag, slot=slot))
            continue
        if pieces and pieces[-1].kind == "tag" and not current:
            # indented continuation of the previous tag description
            pieces[-1].text = (pieces[-1].text + " " + stripped).strip()
            continue
        current.append(stripped)
    flush()
    while pieces and pieces[-1].kind == "blank":
        pieces.pop()
    while pieces and pieces[0].kind == "blank":
        pieces.pop(0)
    return pieces


def classify_comment(token: SourceToken) -> CommentBlock:
    """Parse a comment token into text pieces plus its decoration."""
    if token.kind is not TokenKind.COMMENT:
        raise ValueError("classify_comment needs a comment token")
    if token.style in (CommentStyle.JAVADOC, CommentStyle.BLOCK):
        return _classify_block(token)
    if token.style is CommentStyle.DOCSTRING:
        return _classify_docstring(token)
    return _classify_line(token)


def _classify_line(token: SourceToken) -> CommentBlock:
    m = re.match(r"^(//+|#+)([ \t]*)(.*)$", token.text, re.DOTALL)
    prefix = m.group(1) + m.group(2)
    text = m.group(3)
    pieces = [Piece("para", text)] if text.strip() else []
    return CommentBlock(
        style=CommentStyle.LINE, token=token, lines=[token.text],
        pieces=pieces, margin=prefix,
        max_width=(token.col - 1) + display_width(token.text),
        opener=m.group(1), prefix=prefix)


def _classify_block(token: SourceToken) -> CommentBlock:
    raw = token.text
    opener = "/**" if token.style is CommentStyle.JAVADOC else "/*"
    lines = raw.split("\n")
    max_width = _line_widths(token, lines)
    indent = " " * (token.col - 1)
    if len(lines) == 1:
        inner = raw[len(opener):-2].strip()
        pieces = [Piece("para", inner)] if inner else []
        return CommentBlock(
            style=token.style, token=token, lines=lines, pieces=pieces,
            margin=indent + " * ", max_width=max_width, opener=opener,
            closer_ws=" ", first_inline=bool(inner), closer_own_line=False)
    first_text = lines[0][len(opener):].strip()
    closer_m = re.match(r"^(\s*)(.*?)\s*\*/\s*$", lines[-1])
    closer_ws, closer_text = closer_m.group(1), closer_m.group(2).strip()
    closer_text = closer_text.rstrip("*").strip()
    middle = lines[1:-1]
    contents: list[str] = []
    star_margins = [_STAR_MARGIN_RE.match(ln) for ln in middle if ln.strip()]
    starred = bool(star_margins) and all(star_margins)
    margin = indent + " * "
    if starred:
        margin = next(m.group(0) for m in star_margins)
        for ln in middle:
            m = _STAR_MARGIN_RE.match(ln)
            contents.append(ln[m.end():] if m else ln.strip())
    else:
        for ln in middle:
            contents.append(ln.strip())
        if middle:
            ws = re.match(r"^[ \t]*", middle[0]).group(0)
            margin = ws
    content_lines = ([first_text] if first_text else []) + contents
    if closer_text:
        content_lines.append(closer_text)
    pieces = _split_paragraphs(content_lines)
    return CommentBlock(
        style=token.style, token=token, lines=lines, pieces=pieces,
        margin=margin, max_width=max_width, opener=opener,
        closer_ws=closer_ws, first_inline=bool(first_text),
        closer_own_line=not closer_text)


def _classify_docstring(token: SourceToken) -> CommentBlock:
    raw = token.text
    m = re.match(r"^([A-Za-z]{0,3})('''|\"\"\")", raw)
    quote = m.group(1) + m.group(2)
    plain_quote = m.group(2)
    inner = raw[len(quote):-3]
    lines = raw.split("\n")
    max_width = _line_widths(token, lines)
    indent = " " * (token.col - 1)
    if len(lines) == 1:
        text = inner.strip()
        pieces = [Piece("para", text)] if text else []
        return CommentBlock(
            style=CommentStyle.DOCSTRING, token=token, lines=lines,
            pieces=pieces, margin=indent, max_width=max_width, opener=quote,
            closer_ws=indent, first_inline=bool(text), closer_own_line=False)
    first_text = lines[0][len(quote):].strip()
    last = lines[-1]
    closer_m = re.match(r"^(\s*)(.*?)(?:'''|\"\"\")$", last)
    closer_ws, closer_text = closer_m.group(1), closer_m.group(2).strip()
    middle = lines[1:-1]
    nonblank = [ln for ln in middle if ln.strip()]
    if nonblank:
        margin = min(
            (re.match(r"^[ \t]*", ln).group(0) for ln in nonblank), key=len)
    else:
        margin = indent
    content_lines = ([first_text] if first_text else []) + [ln.strip() for ln in middle]
    if closer_text:
        content_lines.append(closer_text)
    pieces = _split_paragraphs(content_lines)
    return CommentBlock(
        style=CommentStyle.DOCSTRING, token=token, lines=lines, pieces=pieces,
        margin=margin, max_width=max_width, opener=quote,
        closer_ws=closer_ws if not closer_text else margin,
        first_inline=bool(first_text), closer_own_line=not closer_text)


def protect_identifiers(text: str, names: list[str]) -> tuple[str, dict[str, str]]:
    """Swap whole-word identifier references for inert sentinels.

    Only exact, case-sensitive whole words are references; substrings stay
    untouched. Longer names are matched first so ``turnAround`` wins over
    ``turn``.
    """
    mapping: dict[str, str] = {}
    for name in sorted(names, key=len, reverse=True):
        if not name:
            continue
        sentinel = _SENTINEL.format(len(mapping))
        pattern = re.compile(_WORD_BOUNDARY.format(re.escape(name)))
        new_text, n = pattern.subn(sentinel, text)
        if n:
            text = new_text
            mapping[sentinel] = name
    return text, mapping


def restore_identifiers(
    text: str, mapping: dict[str, str], final_names: dict[str, str]
) -> list[tuple[bool, str]]:
    """Replace sentinels with final identifier spellings.

    Returns (is_identifier, text) spans so reflow can treat restored names
    as unbreakable.
    """
    spans: list[tuple[bool, str]] = []
    pos = 0
    for m in _SENTINEL_RE.finditer(text):
        if m.start() > pos:
            spans.append((False, text[pos:m.start()]))
        source_name = mapping.get(m.group(0), "")
        spans.append((True, final_names.get(source_name, source_name)))
        pos = m.end()
    if pos < len(text):
        spans.append((False, text[pos:]))
    return spans or [(False, "")]


def _wrap(spans: list[tuple[bool, str]], budgets: list[int]) -> tuple[list[str], list[str]]:
    """Greedy wrap of spans into lines within per-line display budgets.

    ``budgets[0]`` applies to the first line, ``budgets[-1]`` to the rest.
    Identifier spans and single CJK characters are atomic units; words
    break at whitespace only. An unbreakable unit wider than the budget
    gets its own overlong line and a warning.
    """
    units: list[tuple[str, bool]] = []  # (text, is_space)
    for is_ident, text in spans:
        if is_ident:
            units.append((text, False))
            continue
        word = ""
        for ch in text:
            if ch.isspace():
                if word:
                    units.append((word, False))
                    word = ""
                if not units or not units[-1][1]:
                    units.append((" ", True))
            elif char_width(ch) == 2:
                if word:
                    units.append((word, False))
                    word = ""
                units.append((ch, False))
            else:
                word += ch
        if word:
            units.append((word, False))
    lines: list[str] = []
    warnings: list[str] = []
    current = ""
    width = 0
    pending_space = False

    def budget() -> int:
        return budgets[0] if not lines else budgets[-1]

    for text, is_space in units:
        if is_space:
            if current:
                pending_space = True
            continue
        w = display_width(text)
        sep = 1 if pending_space and current else 0
        if current and width + sep + w > budget():
            lines.append(current)
            current, width, pending_space = "", 0, False
            sep = 0
        if not current and w > budget():
            warnings.append(
                f"unbreakable text {text[:30]!r} is wider than the original line budget")
        current += (" " if sep else "") + text
        width += sep + w
        pending_space = False
    if current:
        lines.append(current)
    return (lines or [""]), warnings


def translate_comment(
    block: CommentBlock,
    backend: TranslationBackend,
    source_lang: str,
    target_lang: str,
    entries: dict[str, str],
    *,
    translit: bool = False,
) -> tuple[str, list[str]]:
    """Translate a classified comment; returns (new token text, warnings).

    Identifier references get protected, the backend translates each
    paragraph and tag description, @param-style slots follow the renaming,
    and the result is reflowed within the original width. If nothing
    changed, the original text comes back byte-for-byte.
    """
    names = list(entries)
    translated: list[Piece] = []
    changed = False
    for piece in block.pieces:
        if piece.kind == "blank":
            translated.append(piece)
            continue
        protected, mapping = protect_identifiers(piece.text, names)
        text, _conf = backend.translate_phrase(protected, source_lang, target_lang, None)
        if translit:
            text = transliterate_text(text)
        spans = restore_identifiers(text, mapping, entries)
        new_text = "".join(s for _, s in spans)
        new_slot = entries.get(piece.slot, piece.slot) if piece.slot else ""
        if new_text != piece.text or (piece.slot and new_slot != piece.slot):
            changed = True
        new_piece = Piece(piece.kind, new_text, tag=piece.tag, slot=new_slot)
        new_piece.spans = spans  # type: ignore[attr-defined]
        translated.append(new_piece)
    if not changed:
        return block.token.text, []
    work = replace(block)
    work.translated = translated
    rendered, warnings = reflow(work)
    return rendered, warnings


def _piece_spans(piece: Piece) -> list[tuple[bool, str]]:
    spans = getattr(piece, "spans", None)
    if spans is None:
        spans = [(False, piece.text)]
    return spans


def reflow(block: CommentBlock) -> tuple[str, list[str]]:
    """Re-render a comment with (possibly translated) pieces wrapped.

    Every output line stays within the original comment's widest line,
    measured in display cells, except where a single unbreakable token
    makes that impossible (reported as a warning).
    """
    pieces = block.translated if block.translated is not None else block.pieces
    warnings: list[str] = []
    indent = " " * (block.token.col - 1)
    if block.style is CommentStyle.LINE:
        text = "".join(s for _, s in _piece_spans(pieces[0])) if pieces else ""
        rendered = block.prefix + text
        if (block.token.col - 1) + display_width(rendered) > block.max_width:
            warnings.append("line comment grew past the original width; "
                            "single-line comments are never split")
        return rendered, warnings

    margin_w = display_width(block.margin)
    body_budget = max(1, block.max_width - margin_w)
    out: list[str] = []

    if block.style is CommentStyle.DOCSTRING:
        open_budget = max(
            1, block.max_width - (block.token.col - 1) - display_width(block.opener) - 3)
    else:
        open_budget = max(
            1, block.max_width - (block.token.col - 1) - display_width(block.opener) - 1)

    first_chunks: list[str] = []
    rest_lines: list[str] = []
    for i, piece in enumerate(pieces):
        if piece.kind == "blank":
            rest_lines.append("")
            continue
        spans = _piece_spans(piece)
        if piece.kind == "tag":
            head = f"@{piece.tag}" + (f" {piece.slot}" if piece.slot else "")
            spans = [(False, "")] + spans
            tag_budget = max(1, body_budget - display_width(head) - 1)
            chunk_lines, w = _wrap(spans, [tag_budget, body_budget])
            warnings += w
            rest_lines.append((head + " " + chunk_lines[0]).rstrip())
            rest_lines.extend(chunk_lines[1:])
            continue
        if i == 0 and block.first_inline:
            chunk_lines, w = _wrap(spans, [open_budget, body_budget])
            warnings += w
            first_chunks = chunk_lines[:1]
            rest_lines.extend(chunk_lines[1:])
        else:
            chunk_lines, w = _wrap(spans, [body_budget])
            warnings += w
            rest_lines.extend(chunk_lines)

    if block.style is CommentStyle.DOCSTRING:
        return _render_docstring(block, indent, first_chunks, rest_lines), warnings
    return _render_block(block, indent, first_chunks, rest_lines), warnings


def _render_block(
    block: CommentBlock, indent: str, first_chunks: list[str], rest: list[str]
) -> str:
    single_source = len(block.lines) == 1
    if single_source and first_chunks and not rest:
        return f"{block.opener} {first_chunks[0]} */"
    lines: list[str] = []
    lines.append(block.opener + (" " + first_chunks[0] if first_chunks else ""))
    for chunk in rest:
        lines.append((block.margin + chunk).rstrip())
    closer_ws = block.closer_ws if not single_source else indent + " "
    lines.append(closer_ws + "*/")
    return "\n".join(lines)


def _render_docstring(
    block: CommentBlock, indent: str, first_chunks: list[str], rest: list[str]
) -> str:
    quote = block.opener
    plain = quote[-3:]
    single_source = len(block.lines) == 1
    if single_source and first_chunks and not rest:
        return f"{quote}{first_chunks[0]}{plain}"
    lines = [quote + (first_chunks[0] if first_chunks else "")]
    for chunk in rest:
        lines.append((block.margin + chunk).rstrip())
    if single_source:
        lines.append(indent + plain)
    elif block.closer_own_line:
        lines.append(block.closer_ws + plain)
    else:
        lines.append(block.margin + plain)
    return "\n".join(lines)
