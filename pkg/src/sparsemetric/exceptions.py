"""Exception types raised by sparsemetric."""


class DimensionMismatchError(ValueError):
    """Operands do not share the dimension the operation needs."""


class UnsupportedGeometryError(ValueError):
    """The requested geometric construction is degenerate for this metric."""


class NoInclusionRegimeError(ValueError):
    """No subset relation holds between the compared balls at this radius."""

    def __init__(self, radius, dim):
        self.radius = radius
        self.dim = dim
        super().__init__(
            f"no inclusion between d_s balls for radius {radius!r} in [1, {dim})"
        )


class OracleContractError(RuntimeError):
    """A membership oracle disagrees with the radii it was declared with."""


class InfeasibleError(RuntimeError):
    """No candidate reached the requested residual tolerance.

    Attributes
    ----------
    best_residual : float
        Smallest residual seen over all candidates that were tried.
    """

    def __init__(self, message, best_residual=float("nan")):
        self.best_residual = best_residual
        super().__init__(message)


class ConvergenceError(RuntimeError):
    """An iterative solve stopped before reaching its tolerance."""
