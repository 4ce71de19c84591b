"""Exception hierarchy shared by all cyclebias modules.

Every raisable condition has its own class so callers can branch on the
failure mode instead of parsing messages.  Search-style routines that treat
failure as an ordinary outcome return ``None`` (or a result object with a
shortfall flag) instead of raising.
"""


class CycleBiasError(Exception):
    """Base class for all library errors."""


class InvalidCycle(CycleBiasError):
    """A vertex sequence is not a valid cycle in the host graph."""


class MissingEdge(CycleBiasError):
    """An operation needed an edge that is absent from the host graph."""


class GuardExceeded(CycleBiasError):
    """An exact/brute-force routine was asked to exceed its size guard."""


class TooManyEdges(CycleBiasError):
    """Requested edge count exceeds the number of available vertex pairs."""


class SizeMismatch(CycleBiasError):
    """Two graphs that must share a vertex set have different sizes."""


class NotIndependent(CycleBiasError):
    """A vertex set required to be independent spans an edge."""


class IndivisibleN(CycleBiasError):
    """A colouring construction needs 2r | n and the input violates it."""


class SetTooSmall(CycleBiasError):
    """A vertex set is too small to carry the requested partition."""


class TooManyExtraEdges(CycleBiasError):
    """The perturbation edge budget exceeds what the construction allows."""


class TargetUnreachable(CycleBiasError):
    """No candidate path reached the requested length."""


class NoPath(CycleBiasError):
    """A required (near-)monochromatic path was not found."""


class NoClosingVertex(CycleBiasError):
    """Path endpoints share no unused common neighbour to close a cycle."""


class PreconditionViolated(CycleBiasError):
    """A documented precondition (typically a degree bound) fails."""


class SearchExhausted(CycleBiasError):
    """A bounded search ran out of budget.

    Under the documented preconditions this indicates a bug, not an
    expected failure state.
    """


class NoConnectingEdge(CycleBiasError):
    """No random edge joins the two requested path windows."""


class ConnectionFailed(CycleBiasError):
    """Absorber construction found no connector at a junction."""

    def __init__(self, junction: int, message: str = ""):
        self.junction = junction
        super().__init__(message or f"no unused connector at junction {junction}")


class AbsorptionFailed(CycleBiasError):
    """No eligible core-matching edge remains for a vertex."""

    def __init__(self, vertex: int, message: str = ""):
        self.vertex = vertex
        super().__init__(message or f"no eligible absorber edge for vertex {vertex}")


class PipelineFailed(CycleBiasError):
    """Every retry of the construction pipeline failed."""

    def __init__(self, message: str, transcript=None):
        self.transcript = transcript
        super().__init__(message)


class StructureViolation(CycleBiasError):
    """A two-cycle assembly precondition is broken; message names it."""


class NoHamiltonCycle(CycleBiasError):
    """The graph has no Hamilton cycle at all."""


class ParseError(CycleBiasError):
    """A graph file is malformed; carries the offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class ConfigInvalid(CycleBiasError):
    """An experiment configuration failed validation."""
