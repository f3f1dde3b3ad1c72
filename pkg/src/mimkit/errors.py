"""Exception hierarchy shared by all mimkit modules."""


class MimkitError(Exception):
    """Base class for every error raised by mimkit."""


class ParseError(MimkitError, ValueError):
    """Malformed named-graph expression or file, with the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ParameterError(MimkitError, ValueError):
    """A parameter is outside its domain (e.g. ``sun(2)``)."""


class SizeLimitError(MimkitError):
    """The input exceeds a hard computational cap; no approximation is attempted."""


class DecompositionError(MimkitError, ValueError):
    """A branch decomposition is structurally invalid for the given graph."""


class ClassViolationError(MimkitError, ValueError):
    """The input graph is not in the class an algorithm requires.

    ``witness`` holds the vertex tuple of a forbidden induced subgraph and
    ``forbidden`` names it.
    """

    def __init__(self, message, forbidden=None, witness=None):
        self.forbidden = forbidden
        self.witness = witness
        super().__init__(message)


class PreconditionError(MimkitError, ValueError):
    """A verified precondition failed (e.g. a pairwise cut bound in a multi-join)."""

    def __init__(self, message, detail=None):
        self.detail = detail
        super().__init__(message)


class InternalConsistencyError(MimkitError):
    """Two results that must be mutually exclusive were both derived."""
