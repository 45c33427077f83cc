"""Exception hierarchy shared by all modules."""


class KnotOrderError(Exception):
    """Base class for every error raised by this package."""


class KnotFileSyntaxError(KnotOrderError, ValueError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "") + ": "
        super().__init__(where + message)


class InvariantViolation(KnotOrderError, ValueError):
    """A value was constructed that breaks one of its stated invariants."""

    def __init__(self, kind, message):
        self.kind = kind
        super().__init__(f"{kind}: {message}")


class MissingImage(KnotOrderError, KeyError):
    pass


class UnknownPresentation(KnotOrderError, KeyError):
    pass


class NonPropagatablePresentation(KnotOrderError):
    pass


class InternalInvariantViolation(KnotOrderError, AssertionError):
    """Raised when an internal consistency check fails; indicates a bug."""


class ResourceLimit(KnotOrderError):
    pass
