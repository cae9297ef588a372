"""Exception types shared across the package."""


class MasspartError(Exception):
    """Base class for all package errors."""


class RankDeficient(MasspartError):
    """Input vectors are not linearly independent to working tolerance."""


class DegenerateDirection(MasspartError):
    """A frame vector is orthogonal to the flat it is supposed to cut."""


class ZeroMass(MasspartError):
    """An operation needs positive total mass and got none."""


class DimensionMismatch(MasspartError):
    """Assignment dimension does not match the target flat."""


class CarrierMismatch(MasspartError):
    """Half-flat and measure live on different flats."""


class UnsupportedKind(MasspartError):
    """The assignment kind does not support the requested operation."""


class EmptyRegion(MasspartError):
    """Requested depth threshold is unattainable."""


class OrthogonalLine(MasspartError):
    """Line direction is orthogonal to the sweep direction."""


class VerticalNormalDegenerate(MasspartError):
    """Hyperplane normal is orthogonal to the vertical direction."""


class OddDimension(MasspartError):
    """The moving-point counterexample only exists for even dimension."""


class MalformedSolution(MasspartError):
    """Solution payload does not fit the instance kind."""


class SearchSpaceTooLarge(MasspartError):
    """Grid oracle refuses search spaces above desk scale."""


class UnsupportedDimension(MasspartError):
    """Plot rendering is limited to ambient dimension <= 3."""
