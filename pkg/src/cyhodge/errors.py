"""Exception types raised across the package."""


class CyHodgeError(Exception):
    """Base class for every error raised by cyhodge."""


class ZeroInverse(CyHodgeError, ZeroDivisionError):
    pass


class UnsupportedRing(CyHodgeError, TypeError):
    pass


class RingMismatch(CyHodgeError, TypeError):
    pass


class MissingAssignment(CyHodgeError, KeyError):
    pass


class PairingViolation(CyHodgeError, ValueError):
    pass


class ShapeMismatch(CyHodgeError, ValueError):
    pass


class NotNilpotent(CyHodgeError, ValueError):
    pass


class NotUnipotent(CyHodgeError, ValueError):
    pass


class NotUnitNorm(CyHodgeError, ValueError):
    pass


class DegenerateForm(CyHodgeError, ValueError):
    pass


class NotClosed(CyHodgeError, ValueError):
    pass


class NotDiagonalGenerator(CyHodgeError, ValueError):
    pass


class NotDiagonalTorus(CyHodgeError, ValueError):
    pass


class ConstraintViolated(CyHodgeError, ValueError):
    pass


class UnknownSelector(CyHodgeError, KeyError):
    pass
