"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial received the zero polynomial."""


class CacheError(RuntimeError):
    """A solution-cache file is malformed or fails re-verification.

    Carries the 1-based line number of the offending record when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
