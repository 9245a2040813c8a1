"""
Exception hierarchy for the mivt package.

Every error raised on purpose by the library derives from :class:`MivtError` and from
the builtin exception that best describes it, so callers may catch either.
"""

from typing import Optional


class MivtError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(MivtError, ValueError):
    """A model parameter lies outside its admissible domain."""


class DomainError(MivtError, ValueError):
    """An operation was called with an argument outside its domain."""


class InfiniteTrawlMeasureError(MivtError, ValueError):
    """The trawl set has infinite Lebesgue measure."""


class BesselRangeError(MivtError, ArithmeticError):
    """K_nu(x) overflows or underflows double precision."""


class QuadratureError(MivtError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, achieved_error: float):
        super().__init__(f"{message} (achieved abs. error {achieved_error:.3e})")
        self.achieved_error = achieved_error


class SimulationResourceError(MivtError, RuntimeError):
    """The requested horizon/intensity would need too many jumps."""


class DegenerateVarianceError(MivtError, ValueError):
    """A series component is constant where a positive variance is required."""


class ModelMismatchError(MivtError, ValueError):
    """The data cannot be represented by the requested model family."""


class FitFailureError(MivtError, RuntimeError):
    """The optimizer failed from every start."""

    def __init__(self, message: str, best_residual: Optional[float] = None):
        suffix = "" if best_residual is None else f" (best residual {best_residual:.6g})"
        super().__init__(message + suffix)
        self.best_residual = best_residual


class StageError(MivtError, RuntimeError):
    """A fitting stage failed; ``stage`` names the step that raised."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"[{stage}] {cause}")
        self.stage = stage
        self.cause = cause


class BootstrapUnstableError(MivtError, RuntimeError):
    """Too many bootstrap replicates failed to refit."""

    def __init__(self, failures: int, total: int):
        super().__init__(f"{failures} of {total} bootstrap replicates failed to refit")
        self.failures = failures
        self.total = total
