"""Exception hierarchy.

Input problems derive from :class:`InputError` (also a ``ValueError``), which
the CLI maps to exit code 2.  Size guards raise :class:`BoundExceeded`.
"""


class OrbitLabError(Exception):
    pass


class InputError(OrbitLabError, ValueError):
    pass


class EmptyInput(InputError):
    pass


class NonPositivePart(InputError):
    pass


class MalformedToken(InputError):
    pass


class LengthMismatch(InputError):
    pass


class RangeViolation(InputError):
    pass


class NotAnIdeal(InputError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ForeignPoint(InputError):
    pass


class PartitionMismatch(InputError):
    pass


class NotSubideal(InputError):
    pass


class EmptyIdeal(InputError):
    pass


class NotPrime(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class PrimeMismatch(InputError):
    pass


class BoundExceeded(OrbitLabError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class InexactDivision(OrbitLabError, ArithmeticError):
    pass


class NegativeExponentResidue(OrbitLabError, ArithmeticError):
    pass
