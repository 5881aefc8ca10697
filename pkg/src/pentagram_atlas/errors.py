"""Exception hierarchy for the pentagram atlas."""


class AtlasError(Exception):
    """Base class for every error raised by this package."""


class LabelError(AtlasError, ValueError):
    """A malformed observable label."""


class IdentityNotAPoint(LabelError):
    """III is the group centre, not a point of the polar space."""


class GeometryError(AtlasError, ValueError):
    pass


class NonCommuting(GeometryError):
    pass


class DegeneratePair(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    pass


class ProductNotScalar(GeometryError):
    pass


class UnclassifiablePlane(GeometryError):
    pass


class PentagramError(AtlasError, ValueError):
    pass


class BadIntersection(PentagramError):
    pass


class RepeatedMeetPoint(PentagramError):
    pass


class EvenParity(PentagramError):
    pass


class EvenParityConfigurationFound(AtlasError, RuntimeError):
    """The exhaustive search met a non-magic five-context configuration."""


class UnknownSignature(AtlasError, RuntimeError):
    pass


class MissingType(AtlasError, RuntimeError):
    pass
