"""Comment classification, reflow, and translation.

The hard rule: reflow may move words between lines but never emits a
line wider than the original block's widest line, measured in display
cells. Identifiers mentioned in comments are protected from the backend
and restored as their final translated names.
"""

from __future__ import annotations

import random

from codeintl.backends import DictionaryBackend, IdentityBackend
from codeintl.comments import (
    classify_comment,
    protect_identifiers,
    reflow,
    restore_identifiers,
    translate_comment,
)
from codeintl.lexer import lex
from codeintl.tokens import CommentStyle, TokenKind
from codeintl.widths import display_width


def first_comment(source: str, lang: str = "java"):
    tok = next(t for t in lex(source, lang) if t.kind is TokenKind.COMMENT)
    return classify_comment(tok)


def body_lines(text: str) -> list[str]:
    return text.split("\n")


def test_line_comment_classification():
    block = first_comment("// keep the old index\nint x;\n")
    assert block.style is CommentStyle.LINE
    assert block.lines == ["// keep the old index"]


def test_javadoc_classification_and_margin():
    block = first_comment("/** Runs.\n * Walks the lap.\n */\nclass A {}\n")
    assert block.style is CommentStyle.JAVADOC
    assert block.margin == " * "
    assert block.max_width == len(" * Walks the lap.")


def test_docstring_classification():
    block = first_comment('"""Count the steps taken."""\n', "python")
    assert block.style is CommentStyle.DOCSTRING


def test_block_comment_classification():
    block = first_comment("/* plain note */\nint x;\n")
    assert block.style is CommentStyle.BLOCK


def test_indented_comment_keeps_its_prefix():
    source = "class A {\n    // inner note about the robot\n}\n"
    block = first_comment(source)
    text, warnings = reflow(block)
    assert text.startswith("// inner")
    assert not warnings


def test_reflow_without_translation_fits_original_width():
    block = first_comment(
        "/** Runs the program.\n * Walks the lap and turns back.\n */\nclass A {}\n")
    text, warnings = reflow(block)
    assert not warnings
    for line in body_lines(text):
        assert display_width(line) <= block.max_width


def test_translated_block_respects_width_budget():
    es = DictionaryBackend.for_pair("en", "es")
    block = first_comment(
        "/** Runs the program.\n * Walks the lap and turns back.\n */\nclass A {}\n")
    text, warnings = translate_comment(block, es, "en", "es", {})
    assert not warnings
    for line in body_lines(text):
        assert display_width(line) <= block.max_width


def test_cjk_translation_counts_double_width():
    zh = DictionaryBackend.for_pair("en", "zh")
    block = first_comment(
        "/* walk the world grid and count\n   every step along the way */\nclass A {}\n")
    text, warnings = translate_comment(block, zh, "en", "zh", {})
    assert not warnings
    for line in body_lines(text):
        assert display_width(line) <= block.max_width


def test_line_comments_warn_instead_of_splitting():
    es = DictionaryBackend.for_pair("en", "es")
    block = first_comment("// turn and move the robot\nint x;\n")
    text, warnings = translate_comment(block, es, "en", "es", {})
    assert "\n" not in text
    assert any("never split" in w for w in warnings)


def test_identifiers_in_comments_become_their_final_names():
    es = DictionaryBackend.for_pair("en", "es")
    block = first_comment("// calls move() before turnAround\nint x;\n")
    text, _ = translate_comment(
        block, es, "en", "es", {"move": "moverse", "turnAround": "mediaVuelta"})
    assert "moverse()" in text
    assert "mediaVuelta" in text
    assert "turnAround" not in text


def test_protect_identifiers_round_trip():
    names = ["move", "turnAround"]
    protected, mapping = protect_identifiers("call move() and turnAround", names)
    assert "move" not in protected
    assert "turnAround" not in protected
    pieces = restore_identifiers(protected, mapping,
                                 {"move": "moverse", "turnAround": "mediaVuelta"})
    assert (True, "moverse") in pieces
    assert (True, "mediaVuelta") in pieces
    assert "".join(p for _, p in pieces) == "call moverse() and mediaVuelta"


def test_protection_does_not_fire_inside_words():
    # "move" inside "remove" must not be protected.
    protected, mapping = protect_identifiers("remove the move marker", ["move"])
    assert protected.count("\x02") == 2
    restored = restore_identifiers(protected, mapping, {"move": "moverse"})
    assert "".join(p for _, p in restored) == "remove the moverse marker"


def test_javadoc_tags_survive_translation():
    es = DictionaryBackend.for_pair("en", "es")
    source = (
        "/**\n"
        " * Returns the count.\n"
        " *\n"
        " * @param start the first value\n"
        " * @return the total count\n"
        " */\n"
        "class A {}\n")
    block = first_comment(source)
    text, _ = translate_comment(block, es, "en", "es", {})
    assert "@param" in text
    assert "@return" in text
    assert "@parámetro" not in text


def test_docstring_quotes_survive_translation():
    es = DictionaryBackend.for_pair("en", "es")
    block = first_comment('"""Count the steps taken."""\n', "python")
    text, _ = translate_comment(block, es, "en", "es", {})
    assert text.startswith('"""')
    assert text.endswith('"""')


def test_translit_flag_romanizes_the_comment():
    zh = DictionaryBackend.for_pair("en", "zh")
    block = first_comment("// count the steps\nint x;\n")
    text, _ = translate_comment(block, zh, "en", "zh", {}, translit=True)
    assert text.isascii()
    assert text.startswith("//")


def test_reflow_of_generated_blocks_never_widens():
    # Seeded sweep: block comments of varied width, text growth up to 4x.
    rng = random.Random(20260819)
    es = DictionaryBackend.for_pair("en", "es")
    words = ["move", "turn", "wall", "count", "step", "world", "grid",
             "beeper", "corner", "run", "walk", "front", "left", "value"]
    for _ in range(200):
        width = rng.randint(18, 60)
        n = rng.randint(4, 30)
        text_words = [rng.choice(words) for _ in range(n)]
        lines, current = [], ""
        for w in text_words:
            if current and len(current) + 1 + len(w) > width:
                lines.append(current)
                current = w
            else:
                current = f"{current} {w}".strip()
        if current:
            lines.append(current)
        body = "\n".join(f" * {ln}" for ln in lines)
        source = f"/** {lines[0]}\n{body}\n */\nclass A {{}}\n"
        block = first_comment(source)
        out, warnings = translate_comment(block, es, "en", "es", {})
        assert not warnings
        for line in body_lines(out):
            assert display_width(line) <= block.max_width
