"""Exception hierarchy shared by all modules."""


class ParameterError(ValueError):
    """A parameter violates a documented constraint (e.g. cycle with n < 3)."""


class CapacityError(ValueError):
    """An instance exceeds a hard size limit (solver cap, join overflow)."""


class StructureError(ValueError):
    """The input graph does not have the structure an operation requires."""


class DefectError(RuntimeError):
    """A construction failed its own postcondition check.

    Raised instead of trusting a case analysis blindly; seeing this means
    a bug in the library, not bad user input.
    """


class FormatError(ValueError):
    """Base class for codec errors; may carry a byte offset or line number."""

    def __init__(self, message, *, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class Graph6Error(FormatError):
    """Malformed graph6 input."""


class EdgeListError(FormatError):
    """Malformed edge-list input."""
