"""Exception types shared across the package."""


class RegammaError(Exception):
    """Base class for all regamma errors."""


class IntegerArgument(RegammaError):
    """Raised when an operation requires a non-integer argument."""


class NonPositiveArgument(RegammaError):
    """Raised when an operation requires a strictly positive argument."""


class PoleError(RegammaError):
    """Raised when Gamma is requested at one of its poles."""


class ContourDegenerate(RegammaError):
    """Raised when a Hankel contour cannot be resolved numerically."""
