"""codeintl: translate the human language inside source code.

The package renames identifiers, rewrites comments, and optionally
translates string literals of Java and Python files between natural
languages, while a token-level structure check proves that nothing else
changed. A separate analyzer reports which scripts and languages a corpus
of source files actually uses.
"""

from .analyzer import CorpusReport, FileLanguageProfile, analyze_corpus
from .backends import (
    CachingBackend,
    DictionaryBackend,
    IdentityBackend,
    ServiceBackend,
    TranslationBackend,
    WordListDetector,
    preferred_tense,
)
from .comments import CommentBlock, classify_comment, reflow, translate_comment
from .declarations import classify_identifiers, scan_declarations
from .errors import (
    BackendUnavailable,
    CodeIntlError,
    InvalidSegment,
    LexError,
    MissingEntry,
    UnsupportedScript,
)
from .identifiers import (
    CasingConvention,
    SegmentedIdentifier,
    fold_to_ascii,
    phrase_of,
    recombine,
    segment,
)
from .jobs import (
    CheckResult,
    JobSummary,
    TranslationJob,
    run_job,
    structure_check,
)
from .lexer import keywords_for, lex
from .tokens import CommentStyle, SourceToken, SymbolTable, TokenKind, render
from .translation import (
    TranslationMap,
    apply_renaming,
    build_translation_map,
    collect_targets,
    resolve_collision,
    should_translate,
)
from .translit import (
    detect_script,
    load_table,
    transliterate,
    transliterate_identifier,
    transliterate_text,
)
from .widths import char_width, display_width

__version__ = "0.1.0"

__all__ = [
    "BackendUnavailable",
    "CachingBackend",
    "CasingConvention",
    "CheckResult",
    "CodeIntlError",
    "CommentBlock",
    "CommentStyle",
    "CorpusReport",
    "DictionaryBackend",
    "FileLanguageProfile",
    "IdentityBackend",
    "InvalidSegment",
    "JobSummary",
    "LexError",
    "MissingEntry",
    "SegmentedIdentifier",
    "ServiceBackend",
    "SourceToken",
    "SymbolTable",
    "TokenKind",
    "TranslationBackend",
    "TranslationJob",
    "TranslationMap",
    "UnsupportedScript",
    "WordListDetector",
    "analyze_corpus",
    "apply_renaming",
    "build_translation_map",
    "char_width",
    "classify_comment",
    "classify_identifiers",
    "collect_targets",
    "detect_script",
    "display_width",
    "fold_to_ascii",
    "keywords_for",
    "lex",
    "load_table",
    "phrase_of",
    "preferred_tense",
    "recombine",
    "reflow",
    "render",
    "resolve_collision",
    "run_job",
    "scan_declarations",
    "segment",
    "should_translate",
    "structure_check",
    "translate_comment",
    "transliterate",
    "transliterate_identifier",
    "transliterate_text",
    "__version__",
]
