"""Exception types shared across the package."""


class TriDyckError(Exception):
    """Base class for all package errors."""


class NotAPartition(TriDyckError, ValueError):
    pass


class CellOutsideShape(TriDyckError, ValueError):
    pass


class EmptyPartition(TriDyckError, ValueError):
    pass


class NotTriangular(TriDyckError, ValueError):
    pass


class ContainmentError(TriDyckError, ValueError):
    """Inner shape is not a sub-partition of the outer shape."""


class InvalidTableau(TriDyckError, ValueError):
    pass


class ShapeMismatch(TriDyckError, ValueError):
    pass


class ParameterOutOfRange(TriDyckError, ValueError):
    pass


class NotSymmetric(TriDyckError, ValueError):
    pass


class DegreeOverflow(TriDyckError, ValueError):
    pass


class UnknownSuite(TriDyckError, KeyError):
    pass


class InternalError(TriDyckError, RuntimeError):
    """A construction produced a result that contradicts a proven uniqueness fact."""


class ReconstructionMismatch(InternalError):
    pass
