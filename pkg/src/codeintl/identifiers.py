"""Identifier segmentation and recombination.

``segment`` parses an identifier into lowercase word segments plus enough
of the original surface form (casing convention, underscore padding, the
raw segment spellings) for ``recombine`` to reproduce the identifier
exactly when handed its own segments back, and to re-dress translated
segments in the same convention otherwise.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass

from .errors import InvalidSegment


class CasingConvention(enum.Enum):
    CAMEL = "camelCase"
    PASCAL = "PascalCase"
    UPPER_SNAKE = "UPPER_SNAKE"
    LOWER_SNAKE = "lower_snake"
    FLAT = "flat"
    OTHER = "other"


@dataclass(frozen=True)
class SegmentedIdentifier:
    segments: tuple[str, ...]       # lowercase word segments
    raw_segments: tuple[str, ...]   # original spelling of each segment
    convention: CasingConvention
    leading_underscores: int = 0
    trailing_underscores: int = 0


_SCRIPT_RANGES = (
    ("han", ((0x4E00, 0x9FFF), (0x3400, 0x4DBF), (0xF900, 0xFAFF), (0x20000, 0x3FFFD))),
    ("kana", ((0x3041, 0x30FF), (0x31F0, 0x31FF))),
    ("hangul", ((0xAC00, 0xD7A3), (0x1100, 0x11FF), (0x3130, 0x318F), (0xA960, 0xA97F))),
    ("arabic", ((0x0600, 0x06FF), (0x0750, 0x077F), (0x08A0, 0x08FF), (0xFB50, 0xFDFF), (0xFE70, 0xFEFF))),
    ("hebrew", ((0x0590, 0x05FF), (0xFB1D, 0xFB4F))),
    ("cyrillic", ((0x0400, 0x04FF), (0x0500, 0x052F))),
    ("latin", ((0x0041, 0x024F), (0x1E00, 0x1EFF), (0x2C60, 0x2C7F), (0xA720, 0xA7FF))),
)


def _char_script(ch: str) -> str:
    cp = ord(ch)
    for name, ranges in _SCRIPT_RANGES:
        for lo, hi in ranges:
            if lo <= cp <= hi:
                return name
    if ch.isdigit():
        return "digit"
    return "other"


def _script_chunks(core: str) -> list[str]:
    """Split at script transitions; digits stay with the preceding run."""
    chunks: list[str] = []
    current = ""
    current_script = ""
    for ch in core:
        script = _char_script(ch)
        if script == "digit" and current:
            current += ch
            continue
        if current and script == current_script:
            current += ch
        else:
            if current:
                chunks.append(current)
            current = ch
            current_script = script if script != "digit" else "latin"
    if current:
        chunks.append(current)
    return chunks


def _case_split(chunk: str) -> list[str]:
    """Split a cased chunk at case boundaries.

    Boundaries sit before an uppercase letter that follows a lowercase
    letter or digit, and before the last capital of an acronym run when a
    lowercase letter follows it; digits attach to the preceding segment.
    """
    if not chunk:
        return []
    parts: list[str] = []
    cur = chunk[0]
    for i in range(1, len(chunk)):
        ch = chunk[i]
        prev = chunk[i - 1]
        nxt = chunk[i + 1] if i + 1 < len(chunk) else ""
        boundary = ch.isupper() and (
            prev.islower()
            or prev.isdigit()
            or (prev.isupper() and nxt.islower())
        )
        if boundary:
            parts.append(cur)
            cur = ch
        else:
            cur += ch
    parts.append(cur)
    return parts


def _has_cased(s: str) -> bool:
    return any(ch.islower() or ch.isupper() for ch in s)


def _detect_convention(core: str, raw_segments: list[str]) -> CasingConvention:
    has_upper = any(ch.isupper() for ch in core)
    has_lower = any(ch.islower() for ch in core)
    if not has_upper:
        return CasingConvention.FLAT if len(raw_segments) == 1 else CasingConvention.CAMEL
    if not has_lower:
        return CasingConvention.UPPER_SNAKE
    first_cased = next((ch for ch in core if ch.isupper() or ch.islower()), "")
    if first_cased.isupper():
        return CasingConvention.PASCAL
    return CasingConvention.CAMEL


def segment(identifier: str) -> SegmentedIdentifier:
    """Parse ``identifier`` into segments; never raises on valid identifiers."""
    stripped = identifier.strip("_")
    if not stripped:
        return SegmentedIdentifier((), (), CasingConvention.OTHER, len(identifier), 0)
    lead = len(identifier) - len(identifier.lstrip("_"))
    trail = len(identifier) - len(identifier.rstrip("_"))
    core = identifier[lead: len(identifier) - trail] if trail else identifier[lead:]

    if "_" in core:
        parts = core.split("_")
        if all(parts) and not any(ch.isupper() for ch in core):
            conv = CasingConvention.LOWER_SNAKE
        elif all(parts) and not any(ch.islower() for ch in core):
            conv = CasingConvention.UPPER_SNAKE
        else:
            # mixed_Case or doubled inner underscores: pass through whole
            return SegmentedIdentifier(
                (core,), (core,), CasingConvention.OTHER, lead, trail)
        return SegmentedIdentifier(
            tuple(p.lower() for p in parts), tuple(parts), conv, lead, trail)

    raw_segments: list[str] = []
    for chunk in _script_chunks(core):
        if _has_cased(chunk):
            raw_segments.extend(_case_split(chunk))
        else:
            raw_segments.append(chunk)
    conv = _detect_convention(core, raw_segments)
    return SegmentedIdentifier(
        tuple(s.lower() for s in raw_segments), tuple(raw_segments), conv, lead, trail)


_IDENT_SEGMENT_RE = re.compile(r"[\w$]+", re.UNICODE)


def _ucfirst(word: str) -> str:
    return word[:1].upper() + word[1:] if word else word


def _lcfirst(word: str) -> str:
    return word[:1].lower() + word[1:] if word else word


def recombine(seg: SegmentedIdentifier, translated_segments: list[str]) -> str:
    """Reassemble segments in the identifier's original convention.

    Positions where the translated segment equals the original lowercase
    segment reuse the original raw spelling, which makes
    ``recombine(segment(x), list(segment(x).segments)) == x`` hold even for
    acronym runs. Raises InvalidSegment when a segment contains characters
    that cannot appear in a Java or Python identifier.
    """
    conv = seg.convention
    dressed: list[str] = []
    for i, word in enumerate(translated_segments):
        if not word:
            continue
        if i < len(seg.segments) and word == seg.segments[i]:
            dressed.append(seg.raw_segments[i])
            continue
        if conv is CasingConvention.CAMEL:
            dressed.append(_lcfirst(word) if not dressed else _ucfirst(word))
        elif conv is CasingConvention.PASCAL:
            dressed.append(_ucfirst(word))
        elif conv is CasingConvention.UPPER_SNAKE:
            dressed.append(word.upper())
        elif conv is CasingConvention.LOWER_SNAKE:
            dressed.append(word.lower())
        elif conv is CasingConvention.FLAT:
            dressed.append(word.lower())
        else:
            dressed.append(word)
    for word in dressed:
        if not _IDENT_SEGMENT_RE.fullmatch(word):
            raise InvalidSegment(
                f"segment {word!r} contains characters illegal in an identifier")
    joiner = "_" if conv in (CasingConvention.UPPER_SNAKE, CasingConvention.LOWER_SNAKE) else ""
    body = joiner.join(dressed)
    return "_" * seg.leading_underscores + body + "_" * seg.trailing_underscores


def phrase_of(seg: SegmentedIdentifier) -> str:
    """Space-joined lowercase segments: the text handed to translation."""
    return " ".join(seg.segments)


def fold_to_ascii(text: str) -> str:
    """Strip diacritics from Latin text; non-decomposable chars unchanged."""
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if unicodedata.category(ch) != "Mn")
