from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, FrozenSet, List, Optional, Tuple

from .constants import NumericsDefaults
from .enums import BurgersMethod, Monitor, SchemeKind

if TYPE_CHECKING:
    from fourier import Field


# -----------------------------------------------------------------------------
# 🌊 Burgers subflow options
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class BurgersSolveOptions:
    """
    Options for one Burgers substep w_t = w w_x.

    Attributes:
        tolerance: Fixed-point residual target (scaled by max(1, |u0|_inf))
        max_iterations: Iteration budget of the characteristic solver
        safety_fraction: Allowed fraction of the shock time per substep
        method: Characteristics (default) or spectral RK4
        rk_substeps: RK4 substeps; None picks a count from the guard and a CFL bound
        dealias_output: Pass the characteristic result through the 2/3 filter
    """

    tolerance: float = NumericsDefaults.BURGERS_TOLERANCE
    max_iterations: int = NumericsDefaults.BURGERS_MAX_ITERATIONS
    safety_fraction: float = NumericsDefaults.SAFETY_FRACTION
    method: BurgersMethod = BurgersMethod.CHARACTERISTICS
    rk_substeps: Optional[int] = None
    dealias_output: bool = True

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not 0.0 < self.safety_fraction < 1.0:
            raise ValueError(
                f"safety_fraction must lie in (0, 1), got {self.safety_fraction}"
            )
        if self.rk_substeps is not None and self.rk_substeps < 1:
            raise ValueError(f"rk_substeps must be >= 1, got {self.rk_substeps}")


# -----------------------------------------------------------------------------
# ⏱️ Time stepping
# -----------------------------------------------------------------------------
DEFAULT_MONITORS: FrozenSet[Monitor] = frozenset(Monitor)


@dataclass(frozen=True)
class StepPlan:
    """
    Uniform-step plan: `steps` steps of size `dt` reaching `final_time`.

    `sobolev_orders` is the (r, q, p) triple used by the norm monitors.
    """

    scheme: SchemeKind
    dt: float
    steps: int
    sobolev_orders: Tuple[int, int, int]
    burgers_options: BurgersSolveOptions = field(default_factory=BurgersSolveOptions)
    monitors: FrozenSet[Monitor] = DEFAULT_MONITORS
    allow_growth: bool = False

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")

    @property
    def final_time(self) -> float:
        return self.steps * self.dt

    @classmethod
    def covering(
        cls,
        scheme: SchemeKind,
        dt: float,
        final_time: float,
        sobolev_orders: Tuple[int, int, int],
        **kwargs,
    ) -> StepPlan:
        """Build a plan whose n*dt equals final_time; fail if dt does not divide it."""
        steps = int(round(final_time / dt))
        if steps < 1 or abs(steps * dt - final_time) > NumericsDefaults.DIVISIBILITY_TOL:
            raise ValueError(f"dt={dt!r} does not divide final_time={final_time!r}")
        return cls(
            scheme=scheme, dt=dt, steps=steps, sobolev_orders=sobolev_orders, **kwargs
        )

    @property
    def snapshot_stride(self) -> int:
        return max(1, math.ceil(self.steps / NumericsDefaults.SNAPSHOT_BUDGET))


@dataclass
class Trajectory:
    """
    Output of evolve(): norms every step, fields every `snapshot_stride` steps.

    `times` and every series in `norm_traces` are aligned (index 0 is t = 0);
    `snapshot_times` and `fields` are aligned with each other.
    """

    times: List[float] = field(default_factory=list)
    norm_traces: Dict[Monitor, List[float]] = field(default_factory=dict)
    snapshot_times: List[float] = field(default_factory=list)
    fields: List["Field"] = field(default_factory=list)
    final: Optional["Field"] = None

    @property
    def steps_taken(self) -> int:
        return max(len(self.times) - 1, 0)


# -----------------------------------------------------------------------------
# 📈 Convergence studies
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class ReferenceMetadata:
    ref_dt: float
    steps: int
    self_convergence_delta: float
    threshold: float


@dataclass
class ConvergenceRow:
    dt: float
    err_hr: float
    err_hq: float
    err_l2: float
    wallclock_s: float
    max_norm_hp: float = math.nan
    admissible: bool = True
    flag: str = ""
    norm_traces: Dict[str, List[float]] = field(default_factory=dict)


@dataclass
class ConvergenceTable:
    """
    One row per dt (sorted decreasing) plus least-squares orders.

    fitted_order_* come from admissible rows only; residuals are the max
    absolute deviation of the log-log fit.
    """

    rows: List[ConvergenceRow]
    fitted_order_hr: float
    fitted_order_hq: float
    residual_hr: float
    residual_hq: float
    reference: Optional[ReferenceMetadata]
    under_resolved: bool = False
    pairwise_orders_hr: List[float] = field(default_factory=list)
    pairwise_orders_hq: List[float] = field(default_factory=list)

    @property
    def admissible_rows(self) -> List[ConvergenceRow]:
        return [row for row in self.rows if row.admissible]


# -----------------------------------------------------------------------------
# 🌱 Regularity growth of the Burgers step
# -----------------------------------------------------------------------------
@dataclass
class GrowthRun:
    amplitude: float
    times: List[float]
    norm_hp: List[float]
    norm_hq: List[float]
    alpha: float
    fitted_c: float
    bounded: bool = True
    fit_time: float = 0.0


@dataclass
class GrowthReport:
    runs: List[GrowthRun]
    c_fit: float
    stability_factor: float
    slack: float = NumericsDefaults.GROWTH_SLACK
    calibration_index: int = 0

    @property
    def all_bounded(self) -> bool:
        return all(run.bounded for run in self.runs)
