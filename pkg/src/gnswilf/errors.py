"""Exception hierarchy shared by every module of the package."""


class GnsError(ValueError):
    """Base class for invalid input or a violated precondition."""


class DimensionMismatch(GnsError):
    pass


class InvalidPoint(GnsError):
    """A point with a negative entry or a non-integer coordinate."""


class ZeroIsHole(GnsError):
    pass


class NotClosed(GnsError):
    """The complement of the hole set is not closed under addition.

    ``hole`` is the offending hole and ``part`` a semigroup element with
    ``hole - part`` also in the semigroup.
    """

    def __init__(self, hole, part):
        self.hole = hole
        self.part = part
        super().__init__(f"hole {hole} = {part} + {tuple(h - p for h, p in zip(hole, part))} "
                         "with both parts in the semigroup")


class RepeatedAxis(GnsError):
    pass


class BadParameters(GnsError):
    pass


class InvalidNumericalSemigroup(GnsError):
    pass


class NotMonomialSemigroup(GnsError):
    pass


class NotZeroDimensional(GnsError):
    pass


class NotContained(GnsError):
    pass


class HypothesisFailed(GnsError):
    pass


class OracleTooLarge(GnsError):
    pass


class Unreachable(GnsError):
    """A random walk could not reach the requested genus within its budget."""
