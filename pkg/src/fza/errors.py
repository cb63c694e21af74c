"""Exception types raised by fza."""


class FzaError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(FzaError, ValueError):
    """A fuzzy set or machine description violates an invariant."""


class UnknownSymbolError(ValidationError):
    """An input token is not a member of the machine's alphabet."""

    def __init__(self, token):
        super().__init__(f"unknown symbol token {token!r}")
        self.token = token


class AlphabetMismatchError(ValidationError):
    """Two machines were compared over different alphabets."""


class KindMismatchError(ValidationError):
    """An operation received the wrong machine type."""


class FormatError(ValidationError):
    """Malformed automaton document.

    ``line`` and ``column`` are 1-based and point at the offending text
    when it can be located.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ResourceLimitError(FzaError, RuntimeError):
    """A configured size or work limit was exceeded."""
