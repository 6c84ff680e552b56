"""Exception types shared across the package."""


class CodeIntlError(Exception):
    """Base class for all errors raised by this package."""


class LexError(CodeIntlError):
    """Raised on malformed source that cannot be tokenized.

    Carries the position of the offending input so callers can report it.
    """

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class InvalidSegment(CodeIntlError):
    """A translated segment contains characters illegal in an identifier."""


class UnsupportedScript(CodeIntlError):
    """No romanization table is available for the requested script."""


class BackendUnavailable(CodeIntlError):
    """The translation backend cannot be reached or does not serve the pair."""


class MissingEntry(CodeIntlError):
    """A renamable identifier has no entry in the translation map."""
