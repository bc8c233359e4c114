"""Exception types raised by the engines."""


class WordPermError(Exception):
    """Base class for all library errors."""


class WordSpecError(WordPermError, ValueError):
    """A word spec is malformed or violates its invariants."""

    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        if position is not None:
            message = f"{message} (at position {position})"
        if expected:
            message = f"{message}; expected {expected}"
        super().__init__(message)


class CapExceededError(WordPermError):
    """A request needs more letters than the handle's hard cap allows."""


class UnresolvedComparisonError(WordPermError):
    """Two shifts agreed up to the absolute comparison cap (suspected periodicity)."""

    def __init__(self, a, b, cap):
        self.a, self.b, self.cap = a, b, cap
        super().__init__(
            f"shifts at positions {a} and {b} agree on the first {cap} letters; "
            "the word may be eventually periodic"
        )


class DegenerateWordError(WordPermError):
    """The scanned prefix does not support the requested analysis."""


class DeltaDomainError(WordPermError):
    """A window is outside the domain where the doubling image formula applies."""


class CrossCheckError(WordPermError):
    """A formula result disagreed with direct extraction (implementation bug)."""


class DisjointnessError(WordPermError):
    """Even and odd start sets intersect at a length where they must not."""


class CensusViolation(WordPermError):
    """A collision was found that does not satisfy the collision conditions."""
