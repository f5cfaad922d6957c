"""Exception hierarchy shared by all modules."""


class QuatMoebError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(QuatMoebError, ZeroDivisionError):
    pass


class SingularMatrix(QuatMoebError, ArithmeticError):
    """The 2x2 quaternionic matrix has (numerically) vanishing determinant."""


class NonRealCoefficients(QuatMoebError, ValueError):
    """A characteristic polynomial that should be real has imaginary parts.

    Raised when a 4x4 complex matrix handed to ``char_poly`` is not the image
    of a quaternionic matrix.
    """


class NonPositiveDeterminant(QuatMoebError, ValueError):
    pass


class DegenerateReduction(QuatMoebError, ArithmeticError):
    """The normal-form reduction hit a factor it cannot invert."""
