"""Exception types raised across the package."""


class KpaError(Exception):
    """Base class for all package errors."""


class ParseError(KpaError):
    """Malformed graph spec or element expression."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FactorizationError(KpaError):
    """Square data fails the bijection or cube condition.

    Carries the offending edge pair or triple in `offenders`.
    """

    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = tuple(offenders)


class ComposabilityError(KpaError):
    """Paths cannot be composed (range/source mismatch)."""


class DegreeError(KpaError):
    """Degree vector out of range for the requested operation."""


class EndpointError(KpaError):
    """Path pair does not satisfy the required endpoint conditions."""


class EmptyFamily(KpaError):
    """An exhaustiveness query got an empty family with no vertex context."""


class NotSaturatedHereditary(KpaError):
    """Vertex set is not certified saturated and hereditary."""


class NotASink(KpaError):
    """Vertex receives nontrivial paths, so the matrix-unit ideal is undefined."""


class NotAcyclic(KpaError):
    """Graph skeleton has a directed cycle."""


class NoCycle(KpaError):
    """Input path is not a cycle."""


class NoEntrance(KpaError):
    """Generalized cycle has no recorded entrance."""


class RingMismatch(KpaError):
    """Operands belong to different coefficient rings."""


class SizeLimit(KpaError):
    """Graph exceeds the configured size limit for this operation."""


class ClosureDiverged(KpaError):
    """Defensive cap hit while computing a closure fixed point."""


class PairError(KpaError):
    """Pair fails the degree/source conditions for a matrix-unit basis."""
