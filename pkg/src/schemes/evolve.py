# =============================================================================
# ⏱️ Uniform time stepping with norm monitors
# =============================================================================
from __future__ import annotations

from typing import Callable, Dict

from dispersion import DispersionSymbol
from fourier import Field, linf_norm, sobolev_norm
from splitting_core import (BlowUpError, GuardViolationError, Monitor,
                            NonConvergenceError, StepPlan, StepTooLargeError,
                            Trajectory, custom_logger)
from subflows import shock_time

from . import steps

MonitorFn = Callable[[Field], float]


def monitor_functions(plan: StepPlan) -> Dict[Monitor, MonitorFn]:
    """Norm evaluators for the monitors requested by the plan."""
    r, q, p = plan.sobolev_orders
    available: Dict[Monitor, MonitorFn] = {
        Monitor.NORM_HR: lambda f: sobolev_norm(f, r),
        Monitor.NORM_HQ: lambda f: sobolev_norm(f, q),
        Monitor.NORM_HP: lambda f: sobolev_norm(f, p),
        Monitor.LINF: linf_norm,
    }
    return {monitor: available[monitor] for monitor in Monitor if monitor in plan.monitors}


def _record(trajectory: Trajectory, monitors: Dict[Monitor, MonitorFn], t: float, u: Field) -> None:
    trajectory.times.append(t)
    for monitor, fn in monitors.items():
        trajectory.norm_traces[monitor].append(fn(u))


def evolve(u0: Field, plan: StepPlan, symbol: DispersionSymbol) -> Trajectory:
    """
    Apply plan.steps steps of the planned scheme starting from u0.

    Norms are recorded at every step; fields every `plan.snapshot_stride` steps
    plus the final one. On a failed step the partial trajectory rides on the error.

    Raises:
        GuardViolationError: Shock guard, fixed-point failure, or non-finite values
    """
    step = steps.step_function(plan.scheme)
    monitors = monitor_functions(plan)
    stride = plan.snapshot_stride
    q = plan.sobolev_orders[1]

    trajectory = Trajectory(norm_traces={monitor: [] for monitor in monitors})
    _record(trajectory, monitors, 0.0, u0)
    trajectory.snapshot_times.append(0.0)
    trajectory.fields.append(u0)

    u = u0
    for index in range(1, plan.steps + 1):
        try:
            u_next = step(
                u, plan.dt, symbol, plan.burgers_options, allow_growth=plan.allow_growth
            )
            if not u_next.is_finite():
                raise BlowUpError("Non-finite values after splitting step")
        except (StepTooLargeError, NonConvergenceError, BlowUpError) as exc:
            horizon = exc.shock_time if isinstance(exc, StepTooLargeError) else shock_time(u)
            trajectory.final = u
            custom_logger.error("❌ Step %d/%d failed: %s", index, plan.steps, exc)
            raise GuardViolationError(
                f"{type(exc).__name__}: {exc}",
                index,
                horizon,
                sobolev_norm(u, q),
                trajectory,
            ) from exc

        u = u_next
        t = index * plan.dt
        _record(trajectory, monitors, t, u)
        if index % stride == 0 or index == plan.steps:
            trajectory.snapshot_times.append(t)
            trajectory.fields.append(u)
        custom_logger.debug("Step %d/%d done (t=%.6g)", index, plan.steps, t)

    trajectory.final = u
    return trajectory
