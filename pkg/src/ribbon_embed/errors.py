"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: "int | None" = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphValidationError(ValueError):
    """Graph violates a structural requirement (connectivity, degree floor)."""


class CycleGraphError(ValueError):
    """The graph is a single cycle. A cycle embeds on every surface once its
    length is rescaled, so none of the genus machinery applies to it."""


class CapExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


class MovePreconditionError(ValueError):
    """A local move was requested at a vertex that does not meet enough
    boundary walks."""


class NoIncreasingMoveError(ValueError):
    """No single-dart reinsertion increases the boundary-walk count."""


class InternalInvariantError(RuntimeError):
    """A guaranteed search failed or double-entry bookkeeping disagreed.
    Always a bug, never a user error; raised loudly on purpose."""


class TargetGenusError(ValueError):
    """Requested genus is below the essential genus of the graph."""


class SchemaFormatError(ValueError):
    """Malformed embedding-schema document."""
