# =============================================================================
# ❗ Error hierarchy
# =============================================================================
from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .models import Trajectory


class SplittingError(Exception):
    """Base class for every error raised by the solver and harness."""


class DimensionError(SplittingError, ValueError):
    """Samples or coefficients do not match the grid size."""


class ConfigurationError(SplittingError, ValueError):
    """Unknown preset, invalid parameter, or malformed run configuration."""

    def __init__(self, message: str, key_path: str = "") -> None:
        self.key_path = key_path
        super().__init__(f"{key_path}: {message}" if key_path else message)


class DissipativityError(SplittingError):
    """Condition Re P(ik) <= 0 violated where growth was not acknowledged."""

    def __init__(self, message: str, worst_mode: int, max_real_part: float) -> None:
        self.worst_mode = worst_mode
        self.max_real_part = max_real_part
        super().__init__(message)


class StepTooLargeError(SplittingError):
    """Burgers substep longer than safety_fraction * shock_time."""

    def __init__(self, t: float, shock_time: float, safety_fraction: float) -> None:
        self.t = t
        self.shock_time = shock_time
        self.safety_fraction = safety_fraction
        super().__init__(
            f"Burgers substep t={t:.6g} exceeds safety_fraction*shock_time="
            f"{safety_fraction:.3g}*{shock_time:.6g}"
        )


class NonConvergenceError(SplittingError):
    """Characteristic fixed-point iteration exhausted its iteration budget."""

    def __init__(self, iterations: int, residual: float) -> None:
        self.iterations = iterations
        self.residual = residual
        super().__init__(
            f"Fixed point did not converge in {iterations} iterations "
            f"(residual {residual:.3e})"
        )


class BlowUpError(SplittingError):
    """NaN or overflow detected in a field."""


class GuardViolationError(SplittingError):
    """A step of evolve() hit the shock-time guard or blew up."""

    def __init__(
        self,
        message: str,
        step_index: int,
        shock_time: float,
        norm_hq: float,
        trajectory: Optional["Trajectory"] = None,
    ) -> None:
        self.step_index = step_index
        self.shock_time = shock_time
        self.norm_hq = norm_hq
        self.trajectory = trajectory
        super().__init__(
            f"{message} at step {step_index} "
            f"(shock_time={shock_time:.6g}, |u|_Hq={norm_hq:.6g})"
        )


class ReferenceInvalidError(SplittingError):
    """Reference integrator failed its self-convergence check."""

    def __init__(self, delta: float, threshold: float) -> None:
        self.delta = delta
        self.threshold = threshold
        super().__init__(
            f"Reference self-convergence delta {delta:.3e} exceeds {threshold:.1e}"
        )


class InsufficientDataError(SplittingError, ValueError):
    """Not enough admissible points for an order fit."""
