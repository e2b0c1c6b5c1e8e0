"""Exception types shared by every layer of the toolkit."""


class AlgebraError(ValueError):
    """Base class for errors raised by the algebra layers."""


class ShapeError(AlgebraError):
    """Dimensions of the operands do not fit together."""


class ModeMismatchError(ShapeError):
    """A symmetric and a nonsymmetric structure were combined."""


class PreconditionError(AlgebraError):
    """A documented precondition of an operation does not hold."""
