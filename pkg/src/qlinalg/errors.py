"""Exception types shared across the package.

Everything deliberate derives from LinAlgError so callers can catch the whole
family at once; most are also ValueErrors (IndexOutOfRange is an IndexError).
"""


class LinAlgError(Exception):
    """Base class for all errors this package raises on purpose."""


# ---- text / construction problems ----------------------------------------

class MalformedScalar(LinAlgError, ValueError):
    """Text is not an integer, a p/q fraction, or a terminating decimal."""


class ZeroDenominator(LinAlgError, ValueError):
    """A p/q literal with q = 0."""


class RaggedRows(LinAlgError, ValueError):
    """Matrix rows of unequal length."""


class EmptyInput(LinAlgError, ValueError):
    """Nothing was supplied where at least one row/vector is required."""


class MixedDimensions(LinAlgError, ValueError):
    """Vectors of different lengths in one collection."""


class MalformedForm(LinAlgError, ValueError):
    """A coordinate expression that cannot be read at all."""


class NonLinearCoordinate(LinAlgError, ValueError):
    """A coordinate expression with a power or a product of parameters."""


# ---- shape problems -------------------------------------------------------

class DimensionMismatch(LinAlgError, ValueError):
    """Operands have incompatible shapes."""


class NotSquare(LinAlgError, ValueError):
    """A square matrix is required."""


class WrongSize(LinAlgError, ValueError):
    """A matrix of one specific size is required (e.g. exactly 2x2)."""


class IndexOutOfRange(LinAlgError, IndexError):
    """A row/column index beyond the matrix."""


class DegreeTooHigh(LinAlgError, ValueError):
    """Polynomial degree does not fit the requested coordinate space."""


# ---- value-dependent problems ---------------------------------------------

class ZeroScale(LinAlgError, ValueError):
    """Row operations never multiply by zero."""


class NotInvertible(LinAlgError, ValueError):
    """The matrix has determinant zero."""


class SingularCoefficient(LinAlgError, ValueError):
    """Cramer's rule needs an invertible coefficient matrix."""


class NegativePowerOfSingular(LinAlgError, ValueError):
    """A negative matrix power needs an invertible base."""


class InputDependent(LinAlgError, ValueError):
    """An independent set was required."""


class DependentPoints(LinAlgError, ValueError):
    """Basis-image construction got dependent domain points."""


class NotSpanning(LinAlgError, ValueError):
    """Too few domain points to determine a map on the whole space."""


class ZeroVectorPresent(LinAlgError, ValueError):
    """Orthogonality checks exclude the zero vector."""


class AllZeroInput(LinAlgError, ValueError):
    """The spanned subspace is the zero space; nothing to orthogonalize."""


class UsageError(LinAlgError, ValueError):
    """Bad command-line invocation."""
