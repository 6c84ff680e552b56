"""End-to-end translation jobs over sets of source files.

A job lexes every input, builds one shared symbol table, translates the
target identifiers once (so a name renames identically everywhere), then
rewrites identifiers, comments, and optionally string literals per file.
Each output is re-lexed and compared against its input token by token;
a job only counts as clean when every file passes that check.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .backends import TranslationBackend
from .comments import classify_comment, translate_comment
from .declarations import classify_identifiers
from .errors import LexError, MissingEntry
from .lexer import lex
from .tokens import (
    RENAMABLE_KINDS,
    SourceToken,
    SymbolTable,
    TokenKind,
    render,
)
from .translation import (
    RTL_LANGS,
    TranslationMap,
    build_translation_map,
    collect_targets,
    should_translate,
)
from .translit import transliterate_text

# Pieces of a string literal that must survive translation byte-for-byte.
_FORMAT_RE = re.compile(
    r"""\\(?:u[0-9a-fA-F]{4}|.)      # escape sequences
      | %[-+ #0]?\d*(?:\.\d+)?[a-zA-Z%]   # printf-style placeholders
      | \{[^{}]*\}                   # brace placeholders
    """,
    re.VERBOSE,
)
_PLACEHOLDER = "\x02{}\x02"
_PLACEHOLDER_RE = re.compile("\x02(\\d+)\x02")


@dataclass
class TranslationJob:
    """Everything run_job needs: inputs, languages, and policy switches."""

    inputs: list[Path]
    prog_lang: str
    source_lang: str
    target_lang: str
    output_dir: Path
    translate_strings: bool = False
    translit_identifiers: bool | None = None
    translit_comments: bool | None = None
    prior_map: Path | None = None
    posterior_map: Path | None = None


@dataclass
class FileResult:
    path: Path
    output: Path
    tokens: int
    comments_translated: int
    strings_translated: int
    check_ok: bool
    check_problems: list[str] = field(default_factory=list)


@dataclass
class JobSummary:
    files: list[FileResult]
    identifier_count: int          # distinct target identifiers
    translated: list[str]          # renamed to something new
    passed_through: list[tuple[str, str]]   # kept verbatim, with the reason
    map_path: Path
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(f.check_ok for f in self.files)

    @property
    def balanced(self) -> bool:
        return self.identifier_count == len(self.translated) + len(self.passed_through)


@dataclass
class CheckResult:
    ok: bool
    problems: list[str] = field(default_factory=list)


def structure_check(
    original: str,
    translated: str,
    lang: str,
    table: SymbolTable | None = None,
    translated_table: SymbolTable | None = None,
) -> CheckResult:
    """Verify that translation changed nothing but renamable content.

    Both texts are lexed and classified; the token-kind sequences must be
    identical, every non-renamable token must keep its exact text, and the
    identifier renaming read off the pair must be a consistent, injective
    mapping.
    """
    problems: list[str] = []
    try:
        a, _ = classify_identifiers(lex(original, lang), lang, table)
        b, _ = classify_identifiers(lex(translated, lang), lang, translated_table)
    except LexError as exc:
        return CheckResult(False, [f"output does not lex: {exc}"])
    if len(a) != len(b):
        return CheckResult(False, [f"token count changed: {len(a)} -> {len(b)}"])
    renames: dict[str, str] = {}
    reverse: dict[str, str] = {}
    for ta, tb in zip(a, b):
        if ta.kind is not tb.kind:
            problems.append(
                f"line {ta.line}: token kind {ta.kind.name} became {tb.kind.name}"
                f" ({ta.text[:20]!r})")
            break
        if ta.kind in RENAMABLE_KINDS:
            if ta.kind is TokenKind.TARGET_IDENTIFIER:
                seen = renames.setdefault(ta.text, tb.text)
                if seen != tb.text:
                    problems.append(
                        f"line {ta.line}: {ta.text!r} renamed inconsistently"
                        f" ({seen!r} vs {tb.text!r})")
                    break
            continue
        if ta.text != tb.text:
            problems.append(
                f"line {ta.line}: {ta.kind.name} text changed"
                f" ({ta.text[:20]!r} -> {tb.text[:20]!r})")
            break
    else:
        for src, dst in renames.items():
            other = reverse.setdefault(dst, src)
            if other != src:
                problems.append(
                    f"identifiers {other!r} and {src!r} both became {dst!r}")
                break
    return CheckResult(not problems, problems)


def _protect_string_parts(text: str) -> tuple[str, dict[str, str]]:
    mapping: dict[str, str] = {}

    def swap(m: re.Match[str]) -> str:
        key = _PLACEHOLDER.format(len(mapping))
        mapping[key] = m.group(0)
        return key

    return _FORMAT_RE.sub(swap, text), mapping


def _translate_string(
    token: SourceToken,
    backend: TranslationBackend,
    job: TranslationJob,
    translit: bool,
) -> str:
    """Translate a string literal's content, keeping quotes, escapes, and
    format placeholders byte-identical. Returns the new token text, or the
    original when translation is not safe or changes nothing."""
    text = token.text
    m = re.match(r"^([a-zA-Z]*)('''|\"\"\"|'|\")", text)
    if not m:
        return text
    prefix, quote = m.group(1), m.group(2)
    lowered = prefix.lower()
    if "f" in lowered or "b" in lowered:
        return text     # interpolation and bytes stay untouched
    if job.prog_lang == "java" and quote == "'":
        return text     # char literal
    body = text[len(prefix) + len(quote):-len(quote)]
    if not body.strip():
        return text
    protected, mapping = _protect_string_parts(body)
    new_body, _conf = backend.translate_phrase(
        protected, job.source_lang, job.target_lang, None)
    if translit:
        new_body = transliterate_text(new_body)
    plain = _PLACEHOLDER_RE.sub("", new_body)
    bad = quote in plain or "\\" in plain
    if len(quote) == 1:
        bad = bad or "\n" in plain or "\r" in plain
    if bad:
        return text     # would not re-lex as one literal
    for key, original in mapping.items():
        new_body = new_body.replace(key, original)
    if new_body == body:
        return text
    return prefix + quote + new_body + quote


def _rename_table(table: SymbolTable, tmap: TranslationMap) -> SymbolTable:
    renamed = SymbolTable()
    for name, role in table.defined.items():
        renamed.declare(tmap.entries.get(name, name), role)
    renamed.external = set(table.external)
    return renamed


def _output_paths(inputs: list[Path], output_dir: Path) -> dict[Path, Path]:
    if len(inputs) == 1:
        return {inputs[0]: output_dir / inputs[0].name}
    base = Path(os.path.commonpath([p.parent for p in inputs]))
    return {p: output_dir / p.relative_to(base) for p in inputs}


def run_job(job: TranslationJob, backend: TranslationBackend) -> JobSummary:
    """Run a translation job end to end and write the outputs.

    Outputs mirror the inputs under ``job.output_dir``; the posterior
    translation map lands next to them. Files that fail the structure
    check are still written (they help debugging) but mark the summary
    as failed.
    """
    sources: dict[Path, str] = {}
    for path in job.inputs:
        # newline='' keeps CRLF intact so outputs mirror the input bytes.
        with open(path, encoding="utf-8", newline="") as fh:
            sources[path] = fh.read()

    union = SymbolTable()
    tokenized: dict[Path, list[SourceToken]] = {}
    for path, text in sources.items():
        toks, union = classify_identifiers(lex(text, job.prog_lang), job.prog_lang, union)
        tokenized[path] = toks
    # Second pass: a name declared in one file is a rename target in all.
    for path in tokenized:
        tokenized[path], union = classify_identifiers(
            tokenized[path], job.prog_lang, union)

    targets = collect_targets([union])
    prior = TranslationMap.load(job.prior_map) if job.prior_map else None

    occupied = {
        t.text
        for toks in tokenized.values()
        for t in toks
        if t.kind in (TokenKind.TARGET_IDENTIFIER, TokenKind.IMMUTABLE_IDENTIFIER)
    }
    rtl = job.target_lang.split("-")[0].lower() in RTL_LANGS
    translit_identifiers = job.translit_identifiers
    if translit_identifiers is None:
        translit_identifiers = rtl
    tmap, results = build_translation_map(
        targets, backend, job.source_lang, job.target_lang, job.prog_lang,
        prior=prior, translit_identifiers=translit_identifiers,
        occupied=occupied)

    translit_comments = job.translit_comments
    if translit_comments is None:
        translit_comments = False
    warnings: list[str] = []
    outputs = _output_paths(job.inputs, job.output_dir)
    translated_union = _rename_table(union, tmap)
    file_results: list[FileResult] = []

    for path, toks in tokenized.items():
        out_tokens: list[SourceToken] = []
        comments = strings = 0
        for tok in toks:
            if tok.kind is TokenKind.TARGET_IDENTIFIER:
                new = tmap.entries.get(tok.text)
                if new is None:
                    if should_translate(tok.text):
                        raise MissingEntry(
                            f"no map entry for identifier {tok.text!r}")
                    new = tok.text
                out_tokens.append(tok.with_text(new))
            elif tok.kind is TokenKind.COMMENT:
                block = classify_comment(tok)
                new_text, warns = translate_comment(
                    block, backend, job.source_lang, job.target_lang,
                    tmap.entries, translit=translit_comments)
                for w in warns:
                    warnings.append(f"{path.name}:{tok.line}: {w}")
                if new_text != tok.text:
                    comments += 1
                out_tokens.append(tok.with_text(new_text))
            elif tok.kind is TokenKind.STRING_LITERAL and job.translate_strings:
                new_text = _translate_string(tok, backend, job, translit_comments)
                if new_text != tok.text:
                    strings += 1
                out_tokens.append(tok.with_text(new_text))
            else:
                out_tokens.append(tok)
        out_path = outputs[path]
        out_path.parent.mkdir(parents=True, exist_ok=True)
        rendered = render(out_tokens)
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(rendered)
        check = structure_check(
            sources[path], rendered, job.prog_lang, union, translated_union)
        file_results.append(FileResult(
            path=path, output=out_path, tokens=len(toks),
            comments_translated=comments, strings_translated=strings,
            check_ok=check.ok, check_problems=check.problems))

    map_path = job.posterior_map or (job.output_dir / "translation_map.json")
    map_path.parent.mkdir(parents=True, exist_ok=True)
    tmap.save(map_path)
    if hasattr(backend, "flush"):
        backend.flush()

    translated_names: list[str] = []
    passed: list[tuple[str, str]] = []
    reasons = {r.name: r.reason for r in results}
    for name in targets:
        entry = tmap.entries.get(name)
        if entry is not None and entry != name:
            translated_names.append(name)
        elif entry == name:
            reason = reasons.get(name, "")
            if not reason or reason == "already mapped":
                reason = "translation equals source"
            passed.append((name, reason))
        else:
            passed.append((name, reasons.get(name, "single character")))
    return JobSummary(
        files=file_results, identifier_count=len(targets),
        translated=translated_names, passed_through=passed,
        map_path=map_path, warnings=warnings)
