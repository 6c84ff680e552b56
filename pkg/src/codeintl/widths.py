"""Display-cell widths for source text.

Line-width budgets for comment reflow are measured in terminal cells:
CJK ideographs, kana, Hangul syllables and full-width forms occupy two
cells, everything else one. The ranges below are the East Asian Wide and
Fullwidth blocks; they are kept as a literal table so the function has no
dependency on the interpreter's Unicode database version.
"""

import bisect

# (start, end) inclusive codepoint ranges that render two cells wide.
_WIDE_RANGES = [
    (0x1100, 0x115F),    # Hangul Jamo, leading consonants
    (0x2E80, 0x2EF3),    # CJK Radicals Supplement
    (0x2F00, 0x2FD5),    # Kangxi Radicals
    (0x2FF0, 0x2FFB),    # Ideographic Description Characters
    (0x3000, 0x303E),    # CJK Symbols and Punctuation (incl. ideographic space)
    (0x3041, 0x3096),    # Hiragana
    (0x3099, 0x30FF),    # Hiragana/Katakana marks, Katakana
    (0x3105, 0x312F),    # Bopomofo
    (0x3131, 0x318E),    # Hangul Compatibility Jamo
    (0x3190, 0x31E3),    # Kanbun, CJK Strokes
    (0x31F0, 0x321E),    # Katakana Phonetic Extensions, Enclosed CJK
    (0x3220, 0x3247),
    (0x3250, 0x4DBF),    # Enclosed CJK, CJK Compatibility, Extension A
    (0x4E00, 0x9FFF),    # CJK Unified Ideographs
    (0xA000, 0xA48C),    # Yi Syllables
    (0xA490, 0xA4C6),    # Yi Radicals
    (0xA960, 0xA97C),    # Hangul Jamo Extended-A
    (0xAC00, 0xD7A3),    # Hangul Syllables
    (0xF900, 0xFAFF),    # CJK Compatibility Ideographs
    (0xFE10, 0xFE19),    # Vertical Forms
    (0xFE30, 0xFE52),    # CJK Compatibility Forms
    (0xFE54, 0xFE66),
    (0xFE68, 0xFE6B),
    (0xFF01, 0xFF60),    # Fullwidth Forms
    (0xFFE0, 0xFFE6),
    (0x16FE0, 0x16FE4),
    (0x17000, 0x187F7),  # Tangut
    (0x18800, 0x18CD5),
    (0x18D00, 0x18D08),
    (0x1B000, 0x1B122),  # Kana Supplement / Extended
    (0x1B150, 0x1B152),
    (0x1B164, 0x1B167),
    (0x1B170, 0x1B2FB),  # Nushu
    (0x20000, 0x2FFFD),  # CJK Extensions B..F
    (0x30000, 0x3FFFD),  # CJK Extension G
]

_STARTS = [r[0] for r in _WIDE_RANGES]
_ENDS = [r[1] for r in _WIDE_RANGES]


def char_width(ch: str) -> int:
    """Width in cells of a single character: 2 for wide CJK forms, else 1."""
    cp = ord(ch)
    i = bisect.bisect_right(_STARTS, cp) - 1
    if i >= 0 and cp <= _ENDS[i]:
        return 2
    return 1


def display_width(text: str) -> int:
    """Total cell width of ``text``.

    Control characters (including tabs) count one cell; callers that care
    about tab expansion must expand before measuring.
    """
    return sum(char_width(ch) for ch in text)
