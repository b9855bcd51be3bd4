"""Exception hierarchy shared by the library and the command line."""


class GrassymError(Exception):
    exit_code = 1


class UsageError(GrassymError, ValueError):
    """Bad arguments: arity mismatch, out-of-range index, malformed input."""

    exit_code = 2


class DomainError(GrassymError, ValueError):
    """Well-formed input outside an operation's domain (e.g. not symmetric)."""

    exit_code = 1


class ConsistencyError(GrassymError, RuntimeError):
    """An internal invariant failed; this indicates a bug."""

    exit_code = 3


class ParseError(UsageError):
    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{message} at line {line}, column {column}"
        if self.expected:
            text += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(text)
