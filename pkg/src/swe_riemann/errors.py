"""Exception hierarchy.

Every error derives from :class:`RiemannError` (a ``ValueError``), so
callers that only care about "bad input or no solution" can catch one type.
"""


class RiemannError(ValueError):
    """Base class; ``field`` names the offending input when there is one."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class InvalidProblem(RiemannError):
    """Malformed problem data (missing or non-numeric fields)."""


class NonPositiveHeight(RiemannError):
    pass


class PorosityOutOfRange(RiemannError):
    pass


class NonPositiveGravity(RiemannError):
    pass


class NonPositiveTheta(RiemannError):
    pass


class NotShockBranch(RiemannError):
    pass


class SupercriticalAnchor(RiemannError):
    pass


class WrongRegime(RiemannError):
    pass


class NoTerrainSolution(RiemannError):
    """The terrain-jump cubic has no positive root for this upstream state."""


class NoWetIntersection(RiemannError):
    """The two wave curves do not meet at a positive height (vacuum forms)."""


class NoIntersection(RiemannError):
    pass


class NoSonicLanding(RiemannError):
    pass


class NegativeInterposedShockSpeed(RiemannError):
    pass


class NeverSolvable(RiemannError):
    pass


class NotDamBreak(RiemannError):
    pass


class SupercriticalData(RiemannError):
    pass
