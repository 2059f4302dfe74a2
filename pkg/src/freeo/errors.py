"""Exception types shared across the package."""


class FreeoError(Exception):
    """Base class for every error raised by this package."""


class SizeCapError(FreeoError, ValueError):
    """A requested diagram or matrix size exceeds the configured cap."""


class ShapeError(FreeoError, ValueError):
    """Operands have incompatible shapes or mixed scalar kinds."""


class InputError(FreeoError, ValueError):
    """An argument violates an operation's preconditions."""


class DomainError(FreeoError, ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class SingularMatrixError(FreeoError, ArithmeticError):
    """Exact inversion hit a zero determinant.

    The exact determinant (which is zero in the scalar domain of the
    matrix) is attached as ``determinant``.
    """

    def __init__(self, message, determinant):
        super().__init__(message)
        self.determinant = determinant


class IllConditionedError(FreeoError, ArithmeticError):
    """A floating-point matrix is too close to singular to invert reliably."""
