"""Exception hierarchy shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotPellType(DomainError):
    """Conic whose binary part does not have positive nonsquare discriminant."""


class DegenerateConic(DomainError):
    pass


class PreconditionError(DomainError):
    """A point handed in does not lie on the curve or surface it should."""


class UnsupportedN(DomainError):
    """No conic bundle exists on the surface for this n."""


class NoGoodSeed(DomainError):
    """None of the seed solutions passes the goodness test."""

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = list(reports)
