"""Exception hierarchy shared across the package."""


class HecError(Exception):
    """Base class for all errors raised by hecsbox."""


class FieldMismatch(HecError, TypeError):
    """Operands belong to different prime fields."""


class DivisionByZero(HecError, ZeroDivisionError):
    pass


class NotASquare(HecError, ValueError):
    pass


class InvalidField(HecError, ValueError):
    pass


class InvalidCurve(HecError, ValueError):
    pass


class FieldTooLarge(HecError, ValueError):
    pass


class PointSearchExhausted(HecError, RuntimeError):
    pass


class InvalidDivisor(HecError, ValueError):
    pass


class IdentityDivisor(HecError, ValueError):
    """The identity divisor has no point readout."""


class DegenerateResult(HecError, ArithmeticError):
    """Generation collapsed to the identity divisor; change the key or points."""


class NotAPermutation(HecError, ValueError):
    pass


class ZeroMask(HecError, ValueError):
    pass
