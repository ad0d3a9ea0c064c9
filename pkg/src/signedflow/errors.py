"""Exception hierarchy shared by every module."""


class SignedFlowError(Exception):
    """Base class for all errors raised by signedflow."""


class InvalidArgument(SignedFlowError, ValueError):
    """An input violates an operation's precondition."""


class ParseError(InvalidArgument):
    """Malformed graph or flow text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InternalError(SignedFlowError, RuntimeError):
    """A state that the underlying theory says cannot occur."""


class Undecided(SignedFlowError):
    """A bounded search ran out of budget before reaching a verdict."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")
