"""Exceptions raised by the library."""


class KindMismatch(TypeError):
    """A point, measure or bounded set does not belong to the expected space."""


class SpaceMismatch(ValueError):
    """Two operands live on different spaces."""


class SupportViolation(ValueError):
    """A measure has an atom outside the set it was claimed to be supported by."""

    def __init__(self, point, subset=None):
        self.point = point
        self.subset = subset
        super().__init__(f"atom {point!r} lies outside {subset!r}")


class BornologyViolation(ValueError):
    """A morphism maps a point of a bounded set outside the declared image bound."""

    def __init__(self, point, bounded_set, message):
        self.point = point
        self.bounded_set = bounded_set
        super().__init__(message)


class NotAProbabilityMeasure(ValueError):
    """Raised where a probability measure is required (nonnegative, total mass 1)."""
