"""Corpus statistics: which human languages a code base actually uses.

Walks a directory of Java and Python sources, counts the writing script
of every identifier occurrence and every comment, and guesses the natural
language of each file's comments. Files that do not lex are skipped and
listed, never fatal. The JSON report is fully deterministic: same corpus
in, same bytes out.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .backends import WordListDetector
from .comments import classify_comment
from .errors import LexError
from .lexer import lex
from .tokens import IDENTIFIER_KINDS, TokenKind
from .translit import detect_script

_EXTENSIONS = {".java": "java", ".py": "python"}


@dataclass
class FileLanguageProfile:
    """Script and language usage of one source file."""

    path: str
    identifier_scripts: dict[str, int] = field(default_factory=dict)
    comment_scripts: dict[str, int] = field(default_factory=dict)
    ascii_only_identifiers: bool = True
    non_ascii_comment_present: bool = False
    comment_language: str | None = None
    comment_language_confidence: float = 0.0

    def as_dict(self) -> dict:
        return {
            "path": self.path,
            "identifier_scripts": dict(sorted(self.identifier_scripts.items())),
            "comment_scripts": dict(sorted(self.comment_scripts.items())),
            "ascii_only_identifiers": self.ascii_only_identifiers,
            "non_ascii_comment_present": self.non_ascii_comment_present,
            "comment_language": self.comment_language,
            "comment_language_confidence": self.comment_language_confidence,
        }


@dataclass
class CorpusReport:
    files: list[FileLanguageProfile]
    skipped: list[dict[str, str]]

    def as_dict(self) -> dict:
        ident_totals: dict[str, int] = {}
        comment_totals: dict[str, int] = {}
        languages: dict[str, int] = {}
        ascii_files = 0
        non_ascii_comment_files = 0
        for prof in self.files:
            for script, n in prof.identifier_scripts.items():
                ident_totals[script] = ident_totals.get(script, 0) + n
            for script, n in prof.comment_scripts.items():
                comment_totals[script] = comment_totals.get(script, 0) + n
            if prof.ascii_only_identifiers:
                ascii_files += 1
            if prof.non_ascii_comment_present:
                non_ascii_comment_files += 1
            if prof.comment_language:
                languages[prof.comment_language] = (
                    languages.get(prof.comment_language, 0) + 1)
        count = len(self.files)
        return {
            "file_count": count,
            "skipped": sorted(self.skipped, key=lambda s: s["path"]),
            "files": [p.as_dict() for p in sorted(self.files, key=lambda p: p.path)],
            "identifier_script_totals": dict(sorted(ident_totals.items())),
            "comment_script_totals": dict(sorted(comment_totals.items())),
            "ascii_identifier_file_fraction": (
                round(ascii_files / count, 4) if count else 0.0),
            "non_ascii_comment_file_fraction": (
                round(non_ascii_comment_files / count, 4) if count else 0.0),
            "comment_languages": dict(sorted(languages.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), ensure_ascii=False, indent=2,
                          sort_keys=True) + "\n"

    def save(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_json())


def profile_file(path: Path, root: Path, detector: WordListDetector) -> FileLanguageProfile:
    """Lex one file and tally scripts per identifier and comment occurrence."""
    lang = _EXTENSIONS[path.suffix]
    text = path.read_text(encoding="utf-8")
    tokens = lex(text, lang)
    prof = FileLanguageProfile(path=path.relative_to(root).as_posix())
    comment_text: list[str] = []
    for tok in tokens:
        if tok.kind in IDENTIFIER_KINDS:
            script = detect_script(tok.text)
            prof.identifier_scripts[script] = prof.identifier_scripts.get(script, 0) + 1
            if not tok.text.isascii():
                prof.ascii_only_identifiers = False
        elif tok.kind is TokenKind.COMMENT:
            stripped = classify_comment(tok).text
            if not stripped.strip():
                continue
            script = detect_script(stripped)
            prof.comment_scripts[script] = prof.comment_scripts.get(script, 0) + 1
            if not stripped.isascii():
                prof.non_ascii_comment_present = True
            comment_text.append(stripped)
    if comment_text:
        guess, confidence = detector.detect(" ".join(comment_text))
        if guess != "unknown" and confidence > 0.5:
            prof.comment_language = guess
            prof.comment_language_confidence = round(confidence, 4)
    return prof


def analyze_corpus(root: Path, detector: WordListDetector | None = None) -> CorpusReport:
    """Profile every Java and Python file under ``root``.

    Files that fail to decode or lex are recorded under ``skipped`` with
    the reason; they never abort the run.
    """
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory {root} does not exist")
    detector = detector or WordListDetector()
    files: list[FileLanguageProfile] = []
    skipped: list[dict[str, str]] = []
    paths = sorted(
        p for p in root.rglob("*")
        if p.is_file() and p.suffix in _EXTENSIONS)
    for path in paths:
        try:
            files.append(profile_file(path, root, detector))
        except (LexError, UnicodeDecodeError) as exc:
            skipped.append({
                "path": path.relative_to(root).as_posix(),
                "error": str(exc),
            })
    return CorpusReport(files=files, skipped=skipped)
