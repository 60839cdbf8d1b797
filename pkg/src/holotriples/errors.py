"""Named domain errors.

Every error raised on bad mathematical input derives from ``DomainError`` so
the command line front end can map it to exit code 1.
"""


class DomainError(ValueError):
    """Base class for failures that are about the data, not the syntax."""


class NonPositiveDeterminant(DomainError):
    pass


class InvalidRegion(DomainError):
    pass


class InvalidA(DomainError):
    pass


class InvalidGammaParams(DomainError):
    pass


class DegeneratePhase(DomainError):
    pass


class InvalidDeterminant(DomainError):
    pass


class BoundaryEigenvalue(DomainError):
    pass


class InconsistentPhases(DomainError):
    pass


class RegimeViolation(DomainError):
    pass


class DegenerateCharge(DomainError):
    pass


class RankConstraint(DomainError):
    pass


class HeartViolation(DomainError):
    pass


class UndefinedSlope(DomainError):
    pass


class ShapeViolation(DomainError):
    pass


class PhaseUndefined(DomainError):
    pass


class DegenerateOnPath(DomainError):
    pass


class SizeBound(DomainError):
    pass


class GenusUnsupported(DomainError):
    pass


class InvalidCharge(DomainError):
    pass
