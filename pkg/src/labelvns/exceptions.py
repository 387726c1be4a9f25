class LabelVNSError(Exception):
    """Base class for errors raised by this package."""


class InputDomainError(LabelVNSError, ValueError):
    """An argument lies outside the domain an operation accepts."""


class UnsolvableInstanceError(LabelVNSError):
    """No feasible solution exists (MLST on a graph that is disconnected even with every label)."""


class OracleLimitError(LabelVNSError):
    """The exact solver refuses instances with too many labels to enumerate."""


class ParseError(LabelVNSError, ValueError):
    """Malformed instance text. ``line`` is 1-based."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedLineError(ParseError):
    pass


class IdOutOfRangeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass
