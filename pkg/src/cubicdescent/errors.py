"""Exception hierarchy.

Every failure mode raised anywhere in the library is a subclass of
CubicDescentError, so the CLI can map each class to a stable exit code.
"""


class CubicDescentError(Exception):
    """Base class for all library errors."""


class PreconditionError(CubicDescentError):
    """An operation was called on input violating its stated precondition."""


class NonSquareMatrixError(PreconditionError):
    pass


class SingularMatrixError(PreconditionError):
    pass


class ZeroPolynomialError(PreconditionError):
    pass


class NotEtaleError(PreconditionError):
    """Defining polynomial is not a monic squarefree quintic."""


class ZeroDivisorError(CubicDescentError):
    """Inversion of a non-unit in the algebra."""


class NonGeneratorError(CubicDescentError):
    """Element does not generate the algebra (characteristic polynomial not squarefree)."""


class DependentFormsError(CubicDescentError):
    """The conjugate linear forms of a descent input are linearly dependent."""


class DegeneratePencilError(CubicDescentError):
    """Two quadrics span less than a 2-dimensional pencil, or the pencil
    determinant vanishes identically."""


class PointNotOnSurfaceError(CubicDescentError):
    pass


class LineNotOnSurfaceError(CubicDescentError):
    pass


class DegenerateSurfaceError(CubicDescentError):
    """A construction produced an identically-zero or otherwise unusable surface."""


class NoRationalPointError(CubicDescentError):
    """Point search exhausted the height bound without finding a point."""


class BadPrimeError(CubicDescentError):
    """Reduction mod p is not usable at this prime."""


class BudgetExceededError(CubicDescentError):
    """An enumeration kernel was asked to exceed its configured budget."""


class SchemaError(CubicDescentError):
    """Malformed or unrecognized JSON artifact."""


class InvalidConfigError(CubicDescentError):
    """Pipeline configuration failed validation."""
