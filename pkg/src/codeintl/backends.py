"""Translation backends and the phrase cache.

A backend answers two questions: how does this phrase read in another
language, and what language is this text in. The dictionary backend is a
deterministic offline fixture driven by bundled JSON word lists; the
service backend speaks a small HTTP JSON protocol (one POST per phrase
batch). Both report a confidence in [0, 1]; a confidence of 0 means the
backend could not translate the phrase at all.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Protocol

import requests

from .errors import BackendUnavailable
from .translit import (
    SCRIPT_ARABIC,
    SCRIPT_CHINESE,
    SCRIPT_HEBREW,
    SCRIPT_JAPANESE,
    SCRIPT_KOREAN,
    SCRIPT_LATIN,
    SCRIPT_RUSSIAN,
    data_dir,
    detect_script,
)

# Verb tenses a part-of-speech hint can ask for. ``None`` means no hint.
TENSE_IMPERATIVE = "imperative"
TENSE_INFINITIVE = "infinitive"
TENSE_THIRD_PERSON = "third_person"
TENSES = (TENSE_IMPERATIVE, TENSE_INFINITIVE, TENSE_THIRD_PERSON)

# Languages whose verbs conventionally appear in the infinitive in code.
_INFINITIVE_LANGS = frozenset({"es", "pt", "fr", "it", "ro", "ca"})

# Latin-script languages where a plural formed by appending 's' reads fine.
_S_PLURAL_LANGS = frozenset({"en", "es", "pt", "fr", "it", "ro", "ca"})

_WORD_RE = re.compile(r"[\w$]+", re.UNICODE)

# Chinese and Japanese write words without separating spaces; when a
# word-by-word translation lands two CJK words next to each other, the
# English space between them must go.
_UNSPACED_LANGS = frozenset({"zh", "ja"})
_CJK_GAP_RE = re.compile(
    "([　-〿㐀-䶿一-鿿豈-﫿ぁ-ヿ])"
    " (?=[　-〿㐀-䶿一-鿿豈-﫿ぁ-ヿ])")


def preferred_tense(lang: str) -> str:
    """Verb tense convention for identifiers in ``lang``.

    Romance languages read best with infinitives (``obtener``); everything
    else defaults to the imperative.
    """
    primary = lang.split("-")[0].lower()
    return TENSE_INFINITIVE if primary in _INFINITIVE_LANGS else TENSE_IMPERATIVE


def hint_to_wire(hint: str | None) -> str:
    return hint if hint is not None else "none"


def hint_from_wire(value: str) -> str | None:
    return None if value in ("", "none") else value


class TranslationBackend(Protocol):
    cache_id: str

    def translate_phrase(
        self, phrase: str, source_lang: str, target_lang: str, hint: str | None = None
    ) -> tuple[str, float]: ...

    def translate_many(
        self, phrases: list[str], source_lang: str, target_lang: str,
        hint: str | None = None,
    ) -> list[tuple[str, float]]: ...

    def detect_language(self, text: str) -> tuple[str, float]: ...


class WordListDetector:
    """Offline language detection from scripts plus small word lists.

    Non-Latin scripts identify a language directly. Latin text votes word
    by word against the bundled lists (English, Spanish, pinyin syllables);
    words shorter than two ASCII characters are never counted. Confidence
    below 0.5 is reported as unknown by callers.
    """

    _SCRIPT_LANG = {
        SCRIPT_CHINESE: "zh",
        SCRIPT_JAPANESE: "ja",
        SCRIPT_KOREAN: "ko",
        SCRIPT_ARABIC: "ar",
        SCRIPT_HEBREW: "he",
        SCRIPT_RUSSIAN: "ru",
    }

    def __init__(self, lists_dir: Path | None = None):
        self._dir = lists_dir or (data_dir() / "langdetect")
        self._words: dict[str, frozenset[str]] = {}

    def _word_list(self, lang: str) -> frozenset[str]:
        if lang not in self._words:
            path = self._dir / f"{lang}.txt"
            words = set()
            if path.exists():
                for line in path.read_text(encoding="utf-8").splitlines():
                    line = line.strip().lower()
                    if line and not line.startswith("#"):
                        words.add(line)
            self._words[lang] = frozenset(words)
        return self._words[lang]

    def detect(self, text: str) -> tuple[str, float]:
        script = detect_script(text)
        if script in self._SCRIPT_LANG:
            return self._SCRIPT_LANG[script], 0.95
        words = [
            w.lower() for w in _WORD_RE.findall(text)
            if len(w) >= 2 or not w.isascii()
        ]
        if not words:
            return "unknown", 0.0
        best_lang, best_score = "unknown", 0.0
        for lang in ("en", "es", "zh"):
            vocab = self._word_list(lang)
            score = sum(1 for w in words if w in vocab) / len(words)
            if score > best_score:
                best_lang, best_score = lang, score
        if best_score < 0.5:
            return "unknown", best_score
        return best_lang, best_score


@dataclass
class _Entry:
    default: str
    verb: dict[str, str]


class DictionaryBackend:
    """Deterministic offline translation from a bundled word dictionary.

    Entries may carry verb readings per tense; a verb-first hint selects
    the verb reading of the first word in the hinted tense. Phrases are
    looked up whole first, then word by word, keeping every non-word
    character (spacing, punctuation, newlines) exactly where it was.
    Unknown words pass through unchanged and lower the confidence.
    """

    def __init__(self, path: Path):
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        self.source_lang = data["source_lang"]
        self.target_lang = data["target_lang"]
        self.entries: dict[str, _Entry] = {}
        for key, value in data["entries"].items():
            if isinstance(value, str):
                self.entries[key] = _Entry(value, {})
            else:
                self.entries[key] = _Entry(value["default"], value.get("verb", {}))
        self.cache_id = f"dict:{self.source_lang}-{self.target_lang}"
        self._detector = WordListDetector()

    @classmethod
    def for_pair(cls, source_lang: str, target_lang: str) -> "DictionaryBackend":
        src = source_lang.split("-")[0].lower()
        dst = target_lang.split("-")[0].lower()
        path = data_dir() / "dicts" / f"{src}-{dst}.json"
        if not path.exists():
            raise BackendUnavailable(
                f"no bundled dictionary for {src}->{dst}; "
                f"pass --backend dict:<path> or service:<url>")
        return cls(path)

    def _lookup(self, word: str, first: bool, hint: str | None) -> str | None:
        entry = self.entries.get(word)
        plural = False
        if entry is None and len(word) > 3 and word.endswith("s"):
            entry = self.entries.get(word[:-1])
            plural = entry is not None
        if entry is None:
            return None
        if hint is not None and first and entry.verb:
            out = entry.verb.get(hint) or entry.verb.get(TENSE_IMPERATIVE) or entry.default
        else:
            out = entry.default
        if plural and self.target_lang.split("-")[0] in _S_PLURAL_LANGS:
            if not out.endswith("s"):
                # Romance plural: -s after a vowel, -es after a consonant.
                out += "s" if out[-1].lower() in "aeiouáéíóúü" else "es"
        return out

    @staticmethod
    def _match_case(source: str, translated: str) -> str:
        if source.isupper() and len(source) > 1:
            return translated.upper()
        if source[:1].isupper():
            return translated[:1].upper() + translated[1:]
        return translated

    def translate_phrase(
        self, phrase: str, source_lang: str, target_lang: str, hint: str | None = None
    ) -> tuple[str, float]:
        if source_lang.split("-")[0] == target_lang.split("-")[0]:
            return phrase, 1.0
        self._check_pair(source_lang, target_lang)
        whole = self.entries.get(phrase.lower())
        if whole is not None:
            if hint is not None and whole.verb:
                out = whole.verb.get(hint) or whole.verb.get(TENSE_IMPERATIVE) or whole.default
            else:
                out = whole.default
            return self._match_case(phrase, out), 1.0
        pieces: list[str] = []
        total = hits = 0
        first = True
        pos = 0
        for m in _WORD_RE.finditer(phrase):
            pieces.append(phrase[pos:m.start()])
            word = m.group()
            pos = m.end()
            if word.isdigit():
                pieces.append(word)
                continue
            total += 1
            out = self._lookup(word.lower(), first, hint)
            first = False
            if out is None:
                pieces.append(word)
            else:
                hits += 1
                pieces.append(self._match_case(word, out))
        pieces.append(phrase[pos:])
        confidence = (hits / total) if total else 1.0
        text = "".join(pieces)
        if target_lang.split("-")[0] in _UNSPACED_LANGS:
            text = _CJK_GAP_RE.sub(r"\1", text)
        return text, confidence

    def translate_many(
        self, phrases: list[str], source_lang: str, target_lang: str,
        hint: str | None = None,
    ) -> list[tuple[str, float]]:
        return [
            self.translate_phrase(p, source_lang, target_lang, hint) for p in phrases
        ]

    def detect_language(self, text: str) -> tuple[str, float]:
        return self._detector.detect(text)

    def _check_pair(self, source_lang: str, target_lang: str) -> None:
        if (source_lang.split("-")[0], target_lang.split("-")[0]) != (
            self.source_lang, self.target_lang
        ):
            raise BackendUnavailable(
                f"dictionary covers {self.source_lang}->{self.target_lang}, "
                f"not {source_lang}->{target_lang}")


class IdentityBackend:
    """Translates every phrase to itself. Useful for source == target runs."""

    cache_id = "identity"

    def translate_phrase(self, phrase, source_lang, target_lang, hint=None):
        return phrase, 1.0

    def translate_many(self, phrases, source_lang, target_lang, hint=None):
        return [(p, 1.0) for p in phrases]

    def detect_language(self, text):
        return WordListDetector().detect(text)


class ServiceBackend:
    """Client for a phrase-translation HTTP service.

    One POST per batch: ``{"from": .., "to": .., "phrases": [..],
    "hint": ..}`` answered by ``{"translations": [..], "confidences":
    [..]}``. Connection problems raise BackendUnavailable; language
    detection stays local (the wire protocol does not carry it).
    """

    def __init__(self, endpoint: str, timeout: float = 10.0):
        self.endpoint = endpoint
        self.timeout = timeout
        self.cache_id = f"service:{endpoint}"
        self._detector = WordListDetector()

    def translate_many(
        self, phrases: list[str], source_lang: str, target_lang: str,
        hint: str | None = None,
    ) -> list[tuple[str, float]]:
        if not phrases:
            return []
        payload = {
            "from": source_lang,
            "to": target_lang,
            "phrases": phrases,
            "hint": hint_to_wire(hint),
        }
        try:
            resp = requests.post(self.endpoint, json=payload, timeout=self.timeout)
            resp.raise_for_status()
            body = resp.json()
            translations = body["translations"]
            confidences = body["confidences"]
            if len(translations) != len(phrases) or len(confidences) != len(phrases):
                raise KeyError("length mismatch")
        except (requests.RequestException, KeyError, ValueError) as exc:
            raise BackendUnavailable(f"translation service failed: {exc}") from exc
        return list(zip(translations, (float(c) for c in confidences)))

    def translate_phrase(
        self, phrase: str, source_lang: str, target_lang: str, hint: str | None = None
    ) -> tuple[str, float]:
        return self.translate_many([phrase], source_lang, target_lang, hint)[0]

    def detect_language(self, text: str) -> tuple[str, float]:
        return self._detector.detect(text)


class CachingBackend:
    """Persistent phrase cache in front of another backend.

    Keyed by (backend id, source, target, hint, phrase) in one JSON file
    per cache directory. A corrupt cache file is discarded with a warning
    and rebuilt; it never fails the job.
    """

    FILENAME = "phrases.json"

    def __init__(self, inner: TranslationBackend, cache_dir: Path | None):
        self.inner = inner
        self.cache_id = inner.cache_id
        self.warnings: list[str] = []
        self._dirty = False
        self._path: Path | None = None
        self._store: dict[str, list] = {}
        if cache_dir is not None:
            self._path = Path(cache_dir) / self.FILENAME
            self._load()

    def _load(self) -> None:
        if self._path is None or not self._path.exists():
            return
        try:
            data = json.loads(self._path.read_text(encoding="utf-8"))
            if not isinstance(data, dict):
                raise ValueError("cache root is not an object")
            self._store = data
        except (ValueError, OSError) as exc:
            self.warnings.append(f"translation cache unreadable, rebuilding: {exc}")
            self._store = {}
            self._dirty = True

    def _key(self, phrase: str, source: str, target: str, hint: str | None) -> str:
        return "\x1f".join((self.cache_id, source, target, hint_to_wire(hint), phrase))

    def translate_many(
        self, phrases: list[str], source_lang: str, target_lang: str,
        hint: str | None = None,
    ) -> list[tuple[str, float]]:
        results: dict[int, tuple[str, float]] = {}
        missing: list[tuple[int, str]] = []
        for i, phrase in enumerate(phrases):
            cached = self._store.get(self._key(phrase, source_lang, target_lang, hint))
            if cached is not None:
                results[i] = (cached[0], float(cached[1]))
            else:
                missing.append((i, phrase))
        if missing:
            fresh = self.inner.translate_many(
                [p for _, p in missing], source_lang, target_lang, hint)
            for (i, phrase), (text, conf) in zip(missing, fresh):
                results[i] = (text, conf)
                self._store[self._key(phrase, source_lang, target_lang, hint)] = [text, conf]
                self._dirty = True
        return [results[i] for i in range(len(phrases))]

    def translate_phrase(
        self, phrase: str, source_lang: str, target_lang: str, hint: str | None = None
    ) -> tuple[str, float]:
        return self.translate_many([phrase], source_lang, target_lang, hint)[0]

    def detect_language(self, text: str) -> tuple[str, float]:
        return self.inner.detect_language(text)

    def flush(self) -> None:
        if self._path is None or not self._dirty:
            return
        self._path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self._path.with_suffix(".tmp")
        tmp.write_text(
            json.dumps(self._store, ensure_ascii=False, sort_keys=True),
            encoding="utf-8")
        tmp.replace(self._path)
        self._dirty = False
