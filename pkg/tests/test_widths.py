"""Display width against the east_asian_width property.

The independent oracle is unicodedata: W and F classes occupy two
cells, everything else one. The comparison runs over assigned script
blocks (Latin, Greek, Cyrillic, Hebrew, Arabic, kana, Han, Hangul,
fullwidth forms); the width table deliberately leaves unassigned
codepoints narrow, where newer Unicode versions default some to wide.
"""

from __future__ import annotations

import unicodedata

from hypothesis import given, strategies as st

from codeintl.widths import char_width, display_width

_SCRIPT_RANGES = [
    (0x0020, 0x007E),  # ASCII
    (0x00A1, 0x024F),  # Latin-1 and Latin Extended
    (0x0391, 0x03FF),  # Greek
    (0x0400, 0x04FF),  # Cyrillic
    (0x05D0, 0x05EA),  # Hebrew letters
    (0x0600, 0x06FF),  # Arabic
    (0x3041, 0x3096),  # Hiragana
    (0x30A1, 0x30FA),  # Katakana
    (0x4E00, 0x9FFF),  # Han
    (0xAC00, 0xD7A3),  # Hangul syllables
    (0xFF01, 0xFF60),  # Fullwidth forms
]

_SCRIPT_ALPHABET = st.one_of(
    [st.characters(min_codepoint=a, max_codepoint=b) for a, b in _SCRIPT_RANGES])


def oracle_width(ch: str) -> int:
    return 2 if unicodedata.east_asian_width(ch) in ("W", "F") else 1


def test_ascii_is_one_cell():
    assert char_width("a") == 1
    assert char_width(" ") == 1
    assert char_width("9") == 1


def test_cjk_is_two_cells():
    assert char_width("中") == 2
    assert char_width("斐") == 2
    assert char_width("ア") == 2
    assert char_width("한") == 2


def test_arabic_and_hebrew_are_one_cell():
    assert char_width("ح") == 1
    assert char_width("ל") == 1


def test_fullwidth_forms_are_two_cells():
    assert char_width("Ａ") == 2
    assert char_width("！") == 2


def test_display_width_sums_characters():
    assert display_width("abc") == 3
    assert display_width("中文") == 4
    assert display_width("a中b") == 4
    assert display_width("") == 0


@given(st.text(alphabet=_SCRIPT_ALPHABET, min_size=0, max_size=80))
def test_display_width_matches_unicodedata(text):
    assert display_width(text) == sum(oracle_width(c) for c in text)


@given(st.text(alphabet=st.characters(min_codepoint=0x4E00, max_codepoint=0x9FFF),
               min_size=1, max_size=40))
def test_han_text_is_double_width(text):
    assert display_width(text) == 2 * len(text)
