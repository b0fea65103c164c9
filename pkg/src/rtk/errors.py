"""Exception hierarchy for rtk."""


class RTKError(Exception):
    """Base class for all library errors."""


class MixedDiscriminantError(RTKError, TypeError):
    """Arithmetic between quadratic-extension values with different d."""


class DimensionMismatch(RTKError, ValueError):
    pass


class NotAdmissibleError(RTKError, ValueError):
    """An endomorphism is not infinitesimally symplectic."""


class NonScalarSquareError(RTKError, ValueError):
    """A**2 is not a scalar multiple of the identity."""


class NotRicciTypeError(RTKError, ValueError):
    pass


class InvalidTripleError(RTKError, ValueError):
    pass


class NotAnIdealError(RTKError, ValueError):
    pass
