"""Exception hierarchy shared by every module."""


class KECoreError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KECoreError, ValueError):
    """An edge-list document could not be parsed.

    ``line`` is the 1-based line number of the offending line, or ``None``
    when the problem is not tied to a single line (e.g. missing edges).
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidMatchingError(KECoreError, ValueError):
    """A matching is inconsistent with its host graph."""


class PreconditionError(KECoreError):
    """An algorithm was called on a graph outside its domain."""


class NotKEError(PreconditionError):
    pass


class NotBipartiteError(PreconditionError):
    pass


class NoPerfectMatchingError(PreconditionError):
    pass


class TooLargeError(KECoreError):
    """The brute-force oracle refuses graphs above its size guard."""
