"""Shared fixtures: corpus paths and a call-counting backend wrapper."""

from __future__ import annotations

from pathlib import Path

import pytest

from codeintl.backends import TranslationBackend

TESTS_DIR = Path(__file__).resolve().parent
CORPUS_JAVA = TESTS_DIR / "corpus" / "java"
CORPUS_PYTHON = TESTS_DIR / "corpus" / "python"
FIXTURES = TESTS_DIR / "fixtures"


class CountingBackend:
    """Delegates to another backend and counts every phrase sent to it."""

    def __init__(self, inner: TranslationBackend):
        self.inner = inner
        self.cache_id = f"counted-{inner.cache_id}"
        self.calls = 0
        self.phrases = 0

    def translate_phrase(self, phrase, source_lang, target_lang, hint=None):
        self.calls += 1
        self.phrases += 1
        return self.inner.translate_phrase(phrase, source_lang, target_lang, hint)

    def translate_many(self, phrases, source_lang, target_lang, hint=None):
        self.calls += 1
        self.phrases += len(phrases)
        return self.inner.translate_many(phrases, source_lang, target_lang, hint)

    def detect_language(self, text):
        return self.inner.detect_language(text)


@pytest.fixture
def corpus_java() -> Path:
    return CORPUS_JAVA


@pytest.fixture
def corpus_python() -> Path:
    return CORPUS_PYTHON


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
