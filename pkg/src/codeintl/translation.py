"""Identifier translation: maps, priors, collisions, renaming.

The translation map is the single source of truth for how names change:
identifiers sharing a name share a translation, and after collision
resolution no two source names share a target name, which is what keeps
renaming reversible and the output compilable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .backends import TranslationBackend, preferred_tense
from .errors import InvalidSegment, MissingEntry
from .identifiers import phrase_of, recombine, segment
from .lexer import keywords_for
from .tokens import (
    ROLE_METHOD,
    SourceToken,
    SymbolTable,
    TokenKind,
)
from .translit import (
    SCRIPT_CHINESE,
    SCRIPT_JAPANESE,
    SCRIPT_KOREAN,
    detect_script,
    transliterate_identifier,
)

ORIGIN_PRIOR = "prior"
ORIGIN_COMPUTED = "computed"

# Target languages written right to left; identifiers there are
# transliterated by default, comments stay in script.
RTL_LANGS = frozenset({"ar", "he", "fa", "ur"})

_CJK_SCRIPTS = frozenset({SCRIPT_CHINESE, SCRIPT_JAPANESE, SCRIPT_KOREAN})


@dataclass
class TranslationMap:
    """Source name to target name, with per-entry origins.

    Prior entries come from a map supplied to the job and are never
    overwritten; computed entries are added as identifiers get translated.
    """

    source_lang: str
    target_lang: str
    entries: dict[str, str] = field(default_factory=dict)
    origins: dict[str, str] = field(default_factory=dict)

    def add(self, name: str, translation: str, origin: str = ORIGIN_COMPUTED) -> None:
        if self.origins.get(name) == ORIGIN_PRIOR:
            return
        self.entries[name] = translation
        self.origins[name] = origin

    def values(self) -> set[str]:
        return set(self.entries.values())

    def to_json(self) -> str:
        doc = {
            "source_lang": self.source_lang,
            "target_lang": self.target_lang,
            "entries": self.entries,
        }
        return json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2) + "\n"

    def save(self, path: Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def load(cls, path: Path, origin: str = ORIGIN_PRIOR) -> "TranslationMap":
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        m = cls(data["source_lang"], data["target_lang"])
        entries = data["entries"]
        seen: dict[str, str] = {}
        for name in sorted(entries):
            target = entries[name]
            if target in seen and seen[target] != name:
                raise ValueError(
                    f"map at {path} is not injective: {seen[target]!r} and "
                    f"{name!r} both become {target!r}")
            seen[target] = name
            m.entries[name] = target
            m.origins[name] = origin
        return m


def collect_targets(tables: list[SymbolTable]) -> dict[str, str]:
    """Union of declared names in first-appearance order, with roles."""
    out: dict[str, str] = {}
    for table in tables:
        for name, role in table.defined.items():
            out.setdefault(name, role)
    return out


def should_translate(name: str) -> bool:
    """Whether a target identifier is worth translating at all.

    Single Latin or Cyrillic letters and digits stay: translating the ``i``
    of a counting loop or the Spanish ``yo`` rendered as ``y``/``o`` would
    hurt more than help. A single CJK character is a whole word and does
    get translated.
    """
    if len(name) != 1:
        return True
    return detect_script(name) in _CJK_SCRIPTS


def resolve_collision(candidate: str, taken: set[str], reserved: frozenset[str]) -> str:
    """Free ``candidate`` from collisions by a numeric suffix.

    The suffix goes before any trailing underscores; 2 is tried first,
    then 3 and so on. ``taken`` holds names already used as translations
    (or otherwise present in the output namespace), ``reserved`` the
    target programming language's keywords.
    """
    if candidate not in taken and candidate not in reserved:
        return candidate
    body = candidate.rstrip("_")
    tail = candidate[len(body):]
    n = 2
    while True:
        attempt = f"{body}{n}{tail}"
        if attempt not in taken and attempt not in reserved:
            return attempt
        n += 1


@dataclass
class IdentifierResult:
    name: str
    translation: str
    translated: bool          # the backend produced this (vs passed through)
    reason: str = ""          # for pass-throughs: why
    collided: bool = False


def translate_identifier(
    name: str,
    role: str,
    backend: TranslationBackend,
    tmap: TranslationMap,
    *,
    taken: set[str],
    reserved: frozenset[str],
    translit: bool = False,
) -> IdentifierResult:
    """Translate one identifier and record it in the map.

    The flow mirrors how a human would do it: split the name into words,
    translate the phrase (method names get a verb-first hint in the target
    language's preferred tense), re-dress the result in the original
    convention, then fix collisions. Anything the backend cannot translate
    passes through unchanged but still claims its name in the map so a
    rerun is a no-op.
    """
    if name in tmap.entries:
        return IdentifierResult(name, tmap.entries[name], False, reason="already mapped")
    seg = segment(name)
    hint = preferred_tense(tmap.target_lang) if role == ROLE_METHOD else None
    phrase = phrase_of(seg)
    translated = False
    reason = ""
    candidate = name
    if not phrase:
        reason = "no letters"
    else:
        text, confidence = backend.translate_phrase(
            phrase, tmap.source_lang, tmap.target_lang, hint)
        if confidence >= 1.0 and text.strip():
            try:
                candidate = recombine(seg, text.split())
                translated = True
            except InvalidSegment:
                candidate = name
                reason = "translation not identifier-safe"
        else:
            reason = "not in dictionary"
    if translit and translated:
        candidate = transliterate_identifier(segment(candidate))
    final = resolve_collision(candidate, taken - {name}, reserved)
    tmap.add(name, final)
    taken.add(final)
    return IdentifierResult(
        name, final, translated, reason=reason, collided=(final != candidate))


def apply_renaming(tokens: list[SourceToken], tmap: TranslationMap) -> list[SourceToken]:
    """Replace every renamable identifier with its map entry.

    Names skipped by ``should_translate`` stay as they are; any other
    renamable identifier without an entry is an internal error and raises
    MissingEntry rather than producing a half-renamed file.
    """
    out: list[SourceToken] = []
    for tok in tokens:
        if tok.kind is TokenKind.TARGET_IDENTIFIER:
            new = tmap.entries.get(tok.text)
            if new is not None:
                out.append(tok.with_text(new))
                continue
            if not should_translate(tok.text):
                out.append(tok)
                continue
            raise MissingEntry(f"no translation recorded for {tok.text!r}")
        else:
            out.append(tok)
    return out


def build_translation_map(
    targets: dict[str, str],
    backend: TranslationBackend,
    source_lang: str,
    target_lang: str,
    prog_lang: str,
    *,
    prior: TranslationMap | None = None,
    translit_identifiers: bool = False,
    occupied: set[str] | None = None,
) -> tuple[TranslationMap, list[IdentifierResult]]:
    """Translate every translatable target name, in first-appearance order.

    ``occupied`` is the set of identifier texts already present in the file
    set; candidates avoid it so a translation never merges with an existing
    name (which would change how the output classifies).
    """
    tmap = TranslationMap(source_lang, target_lang)
    if prior is not None:
        if (prior.source_lang, prior.target_lang) != (source_lang, target_lang):
            raise ValueError(
                f"prior map is {prior.source_lang}->{prior.target_lang}, "
                f"job is {source_lang}->{target_lang}")
        for k, v in prior.entries.items():
            tmap.add(k, v, ORIGIN_PRIOR)
    reserved = keywords_for(prog_lang)
    taken = tmap.values()
    if occupied:
        taken |= set(occupied)
    results: list[IdentifierResult] = []
    for name, role in targets.items():
        if not should_translate(name):
            results.append(IdentifierResult(name, name, False, reason="single character"))
            continue
        results.append(translate_identifier(
            name, role, backend, tmap,
            taken=taken, reserved=reserved, translit=translit_identifiers))
    return tmap, results
