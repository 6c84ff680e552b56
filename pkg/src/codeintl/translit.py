"""Romanization of non-Latin identifiers and comments.

Rules live in per-script TSV tables (sequence <TAB> ascii), applied
longest-match-first. Outputs are pure ASCII; characters no table covers
pass through when they are ASCII already and become ``_`` otherwise, so a
second pass is always the identity. The data directory can be replaced by
pointing the CODEINTL_DATA environment variable at another tree with the
same layout.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import UnsupportedScript
from .identifiers import SegmentedIdentifier, fold_to_ascii, recombine
from .lexer import JAVA_KEYWORDS, PYTHON_KEYWORDS

SCRIPT_LATIN = "Latin"
SCRIPT_CHINESE = "Chinese"
SCRIPT_JAPANESE = "Japanese"
SCRIPT_KOREAN = "Korean"
SCRIPT_ARABIC = "Arabic"
SCRIPT_HEBREW = "Hebrew"
SCRIPT_RUSSIAN = "Russian"
SCRIPT_MIXED = "Mixed"
SCRIPT_OTHER = "Other"

TABLE_FILES = {
    SCRIPT_LATIN: "latin.tsv",
    SCRIPT_CHINESE: "chinese.tsv",
    SCRIPT_JAPANESE: "japanese.tsv",
    SCRIPT_KOREAN: "korean.tsv",
    SCRIPT_ARABIC: "arabic.tsv",
    SCRIPT_HEBREW: "hebrew.tsv",
    SCRIPT_RUSSIAN: "russian.tsv",
}

_BLOCKS = (
    (SCRIPT_CHINESE, ((0x4E00, 0x9FFF), (0x3400, 0x4DBF), (0xF900, 0xFAFF),
                      (0x3000, 0x303F), (0x20000, 0x3FFFD))),
    (SCRIPT_JAPANESE, ((0x3041, 0x30FF), (0x31F0, 0x31FF), (0xFF66, 0xFF9F))),
    (SCRIPT_KOREAN, ((0xAC00, 0xD7A3), (0x1100, 0x11FF), (0x3130, 0x318F),
                     (0xA960, 0xA97F))),
    (SCRIPT_ARABIC, ((0x0600, 0x06FF), (0x0750, 0x077F), (0x08A0, 0x08FF),
                     (0xFB50, 0xFDFF), (0xFE70, 0xFEFF))),
    (SCRIPT_HEBREW, ((0x0590, 0x05FF), (0xFB1D, 0xFB4F))),
    (SCRIPT_RUSSIAN, ((0x0400, 0x04FF), (0x0500, 0x052F))),
    (SCRIPT_LATIN, ((0x0041, 0x005A), (0x0061, 0x007A), (0x00C0, 0x024F),
                    (0x1E00, 0x1EFF), (0x2C60, 0x2C7F))),
)


def data_dir() -> Path:
    override = os.environ.get("CODEINTL_DATA")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def _script_of_char(ch: str) -> str | None:
    cp = ord(ch)
    for name, ranges in _BLOCKS:
        for lo, hi in ranges:
            if lo <= cp <= hi:
                return name
    return SCRIPT_OTHER if ch.isalpha() else None


def detect_script(text: str) -> str:
    """Dominant script of the letters in ``text``.

    Returns Latin for letterless text, Mixed when two different non-Latin
    scripts each exceed a fifth of the letters. Han characters alongside
    kana count as Japanese.
    """
    counts: dict[str, int] = {}
    for ch in text:
        script = _script_of_char(ch)
        if script is not None:
            counts[script] = counts.get(script, 0) + 1
    if not counts:
        return SCRIPT_LATIN
    if counts.get(SCRIPT_JAPANESE):
        counts[SCRIPT_JAPANESE] += counts.pop(SCRIPT_CHINESE, 0)
    total = sum(counts.values())
    non_latin = [
        (n, c) for n, c in counts.items()
        if n not in (SCRIPT_LATIN,) and c / total > 0.2
    ]
    if len(non_latin) >= 2:
        return SCRIPT_MIXED
    return max(counts.items(), key=lambda kv: (kv[1], kv[0]))[0]


@dataclass(frozen=True)
class RomanizationTable:
    script: str
    rules: tuple[tuple[str, str], ...]  # sorted longest sequence first

    @property
    def max_len(self) -> int:
        return len(self.rules[0][0]) if self.rules else 0


def load_table(script: str, path: Path | None = None) -> RomanizationTable:
    """Read one script's TSV rules; '#' lines are header commentary."""
    if script not in TABLE_FILES:
        raise UnsupportedScript(f"no romanization table for script {script!r}")
    if path is None:
        path = data_dir() / "translit" / TABLE_FILES[script]
    rules: list[tuple[str, str]] = []
    for raw_line in path.read_text(encoding="utf-8").splitlines():
        if not raw_line or raw_line.startswith("#"):
            continue
        seq, _, out = raw_line.partition("\t")
        if not seq:
            continue
        if seq.isascii():
            raise ValueError(f"rule source {seq!r} must contain non-ASCII text")
        if not all(c.isascii() and c.isalnum() for c in out):
            raise ValueError(f"rule output {out!r} is not ASCII letters/digits")
        rules.append((seq, out))
    rules.sort(key=lambda r: (-len(r[0]), r[0]))
    return RomanizationTable(script, tuple(rules))


@functools.lru_cache(maxsize=None)
def _cached_index(script: str, data_path: str) -> dict[str, list[tuple[str, str]]]:
    by_first: dict[str, list[tuple[str, str]]] = {}
    for seq, out in load_table(script).rules:
        by_first.setdefault(seq[0], []).append((seq, out))
    return by_first


def transliterate(text: str, script: str) -> str:
    """Romanize ``text`` using the table for ``script``.

    ASCII passes through; non-ASCII characters the table does not cover
    become ``_``. The result is always ASCII, and transliterating it again
    is the identity because rule sources are never ASCII.
    """
    if script in (SCRIPT_MIXED, SCRIPT_OTHER):
        raise UnsupportedScript(f"cannot transliterate script {script!r}")
    by_first = _cached_index(script, str(data_dir()))
    # Kanji inside Japanese text read through the Chinese table.
    han_fallback = (_cached_index(SCRIPT_CHINESE, str(data_dir()))
                    if script == SCRIPT_JAPANESE else {})
    pieces: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        matched = False
        for seq, out in by_first.get(ch, ()):
            if text.startswith(seq, i):
                pieces.append(out)
                i += len(seq)
                matched = True
                break
        if not matched:
            for seq, out in han_fallback.get(ch, ()):
                if text.startswith(seq, i):
                    pieces.append(out)
                    i += len(seq)
                    matched = True
                    break
        if matched:
            continue
        if ch.isascii():
            pieces.append(ch)
        else:
            folded = fold_to_ascii(ch)
            pieces.append(folded if folded.isascii() else "_")
        i += 1
    return "".join(pieces)


_ALL_KEYWORDS = JAVA_KEYWORDS | PYTHON_KEYWORDS


def transliterate_segment(seg_text: str, fallback_script: str | None = None) -> str:
    """Romanize one identifier segment, picking its table by script."""
    script = detect_script(seg_text)
    if script == SCRIPT_LATIN:
        out = fold_to_ascii(seg_text)
        return out if out.isascii() else transliterate(out, SCRIPT_LATIN)
    if script in (SCRIPT_MIXED, SCRIPT_OTHER):
        if fallback_script in TABLE_FILES:
            return transliterate(seg_text, fallback_script)
        raise UnsupportedScript(f"cannot transliterate script {script!r}")
    return transliterate(seg_text, script)


def transliterate_text(text: str) -> str:
    """Romanize running text, picking a table per script run.

    Unlike :func:`transliterate`, this never needs a script argument and
    never raises: each run of same-script letters uses its own table, Han
    always reads through the Chinese table, Latin letters fold to ASCII,
    and anything without a table becomes ``_``. Non-letters pass through
    when ASCII. The result is always ASCII.
    """
    pieces: list[str] = []
    run: list[str] = []
    run_script: str | None = None

    def flush() -> None:
        nonlocal run_script
        if not run:
            return
        chunk = "".join(run)
        if run_script in TABLE_FILES:
            pieces.append(transliterate(chunk, run_script))
        else:
            folded = fold_to_ascii(chunk)
            pieces.append(folded if folded.isascii() else "_" * len(chunk))
        run.clear()
        run_script = None

    for ch in text:
        script = _script_of_char(ch)
        if script is None:
            flush()
            if ch.isascii():
                pieces.append(ch)
            else:
                folded = fold_to_ascii(ch)
                pieces.append(folded if folded.isascii() else "_")
            continue
        if script == SCRIPT_LATIN:
            flush()
            folded = fold_to_ascii(ch)
            pieces.append(folded if folded.isascii() else "_")
            continue
        if script != run_script:
            flush()
            run_script = script
        run.append(ch)
    flush()
    return "".join(pieces)


def transliterate_identifier(seg: SegmentedIdentifier, script: str | None = None) -> str:
    """Romanize a segmented identifier into a valid ASCII identifier.

    Each segment picks its table by detected script (``script`` is the
    fallback for mixed segments). A leading digit gets an underscore
    prefix and keyword collisions get a numeric suffix so the result
    re-lexes as a single identifier in both Java and Python.
    """
    out_segments = [transliterate_segment(s, script) for s in seg.segments]
    if not any(out_segments):
        return "_" * max(1, seg.leading_underscores + seg.trailing_underscores)
    result = recombine(seg, out_segments)
    if result and result[0].isdigit():
        result = "_" + result
    if result in _ALL_KEYWORDS:
        result += "2"
    return result
