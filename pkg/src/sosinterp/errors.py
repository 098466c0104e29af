"""Exception types shared across the toolkit."""


class SosInterpError(Exception):
    """Base class for all toolkit errors."""


class GridKindError(SosInterpError, ValueError):
    """An operation received a grid of an unsupported kind."""


class IdenticallyZeroError(SosInterpError, ValueError):
    """Rootfinding was asked for the roots of the zero interpolant."""


class AdaptiveConvergenceError(SosInterpError, RuntimeError):
    """Adaptive interpolation hit the size cap without converging.

    Carries the last achieved residual so callers can decide whether the
    partially converged interpolant would still be usable.
    """

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class RankDeficiencyError(SosInterpError, ValueError):
    """Orthogonalization found numerically dependent basis columns.

    ``column`` is the index of the first column whose R diagonal fell
    below the relative rank tolerance.
    """

    def __init__(self, message, column):
        super().__init__(message)
        self.column = column


class SdpaParseError(SosInterpError, ValueError):
    """A .dat-s file could not be parsed; ``line`` is the 1-based line number."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DegenerateSupportError(SosInterpError, RuntimeError):
    """The optimal support polynomial vanishes identically.

    Every point of the design space is then a root and no discrete support
    can be extracted; the caller must treat the design as degenerate.
    """
