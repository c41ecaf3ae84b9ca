"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed input: wrong shape, out-of-range entry, bad parameters."""


class ShapeError(ValidationError):
    """Vectors or matrices whose (alpha, beta) split does not agree."""


class ParseError(ValidationError):
    """A code file that does not follow the expected grammar."""

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, needed, cap, what="enumeration"):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what} needs {needed} vectors, cap is {cap} (raise it with --cap, --oracle-cap or Z2Z4_CAP)")


class ConsistencyError(ValueError):
    """Input data that cannot come from a genuine code, e.g. a bogus weight enumerator."""
