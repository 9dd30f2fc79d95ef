"""Exception hierarchy shared by all modules."""


class HalphenError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HalphenError, ValueError):
    """Argument outside the mathematical domain (e.g. Im(tau) <= 0, non-finite input)."""


class DimensionMismatch(HalphenError, ValueError):
    pass


class BlowUp(HalphenError, ArithmeticError):
    """Integration stopped near a movable singularity or natural boundary.

    ``partial`` holds the trajectory computed up to the failure point, if any.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConvergenceFailure(HalphenError, ArithmeticError):
    pass


class PathThroughSingularity(HalphenError, ValueError):
    pass


class DegenerateInitialData(HalphenError, ValueError):
    pass


class StationaryRatio(HalphenError, ArithmeticError):
    pass


class PoleError(HalphenError, ZeroDivisionError):
    pass


class SingularEvaluation(HalphenError, ZeroDivisionError):
    pass


class CoincidentPositions(HalphenError, ValueError):
    pass


class TrajectoryTooCoarse(HalphenError, ValueError):
    pass


class ConfigError(HalphenError, ValueError):
    """Invalid scenario configuration; ``field`` names the offending path."""

    def __init__(self, message, field=None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
