"""Exception hierarchy shared by all modules."""


class RGroupError(Exception):
    """Base class for all domain errors raised by this package."""


class InconsistentSymbol(RGroupError):
    """The same cuspidal label was declared with conflicting attributes."""


class UnpairedDual(RGroupError):
    """A non-self-dual summand appears without its dual partner at equal
    multiplicity."""


class InvalidParameter(RGroupError):
    """A parameter failed validation against its target dual group."""


class NotSelfDualInput(RGroupError):
    """An operation defined only for self-dual cuspidal data received a
    non-self-dual input."""


class InvalidJordanData(RGroupError):
    """Jordan-block data failed validation."""


class InvalidInducingData(RGroupError):
    """Inducing data for a standard Levi subgroup failed validation."""


class InvalidUnitaryData(RGroupError):
    """Unitary-group input failed validation or a required sign hypothesis."""


class DimensionMismatch(RGroupError):
    """Summand dimensions do not fill the target dual group."""


class OddMultiplicitySp(RGroupError):
    """A symplectic centralizer factor would need odd size."""


class UnresolvedConstraint(RGroupError):
    """The determinant constraint could not be resolved into a free product.

    Unreachable for parameters that pass validation; kept as a guard so a
    descriptor is never silently emitted with the constraint half-applied.
    """


class BoundExceeded(RGroupError):
    """Brute-force enumeration would exceed the configured size bounds."""


class NonElementaryQuotient(RGroupError):
    """The Weyl-group quotient is not elementary abelian of exponent 2.

    Signals a bug or an out-of-theory descriptor; never expected on valid
    inputs.
    """


class BoundsInfeasible(RGroupError):
    """Random-instance bounds admit no valid instance."""


class ParseError(RGroupError):
    """An instance file could not be parsed."""
