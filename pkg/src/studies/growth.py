"""
Regularity growth of the Burgers step: ‖Φ_B^t u0‖_{H^p} <= exp(c α t) ‖u0‖_{H^p}
with α = max_t ‖Φ_B^t u0‖_{H^q}.

Each run is substepped with a fixed dt up to the final time. One constant c_fit is
fitted on the calibration run, the run reaching the largest α T, and every run's
full ratio series is then checked against exp(slack · c_fit · α t).

Per-run constants feed the stability factor only. The bound depends on t through
α t, so they are fitted over a shared horizon α t <= κ, κ being the smallest α T
in the family: large amplitudes use a prefix of their series, small ones all of it.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence

import numpy as np

from dispersion import SobolevIndices
from fourier import Field, sobolev_norm
from splitting_core import (BurgersSolveOptions, GrowthReport, GrowthRun,
                            NumericsDefaults, custom_logger)
from subflows import burgers_flow

_BOUND_RTOL = 1e-12


def _burgers_series(
    u0: Field, dt: float, steps: int, opts: BurgersSolveOptions
) -> List[Field]:
    fields = [u0]
    for _ in range(steps):
        fields.append(burgers_flow(fields[-1], dt, opts))
    return fields


def _smallest_constant(
    norm_hp: Sequence[float], base: float, alpha: float, times: Sequence[float]
) -> float:
    """Smallest c >= 0 with norm_hp[n] <= exp(c α t_n) base on the given prefix."""
    if not times or alpha <= 0 or base <= 0:
        return 0.0
    ratios = np.array(norm_hp[: len(times)]) / base
    return max(0.0, float(np.max(np.log(ratios) / (alpha * np.array(times)))))


def _window_steps(kappa: float, alpha: float, dt: float, max_steps: int) -> int:
    if alpha == 0.0:
        return max_steps
    return max(1, min(max_steps, int(math.floor(kappa / (alpha * dt) + 1e-9))))


def growth_check(
    family: Sequence[Field],
    dt: float,
    final_time: float,
    indices: SobolevIndices,
    opts: Optional[BurgersSolveOptions] = None,
    amplitudes: Optional[Sequence[float]] = None,
) -> GrowthReport:
    """
    Calibrate the growth constant on one run and check every run of the family against it.

    Raises:
        StepTooLargeError: A substep crosses the shock guard
    """
    if not dt > 0 or not final_time > 0:
        raise ValueError("dt and final_time must be positive")
    if not family:
        raise ValueError("growth family must not be empty")
    opts = opts or BurgersSolveOptions()
    _, q, p = indices.as_tuple()
    amplitudes = list(amplitudes) if amplitudes is not None else [
        float(np.max(np.abs(u0.samples))) for u0 in family
    ]
    max_steps = int(round(final_time / dt))
    if max_steps < 1:
        raise ValueError(f"dt={dt} exceeds final_time={final_time}")
    times = [n * dt for n in range(1, max_steps + 1)]

    runs: List[GrowthRun] = []
    for amplitude, u0 in zip(amplitudes, family):
        fields = _burgers_series(u0, dt, max_steps, opts)
        norm_hq = [sobolev_norm(f, q) for f in fields]
        runs.append(
            GrowthRun(
                amplitude=amplitude,
                times=list(times),
                norm_hp=[sobolev_norm(f, p) for f in fields[1:]],
                norm_hq=norm_hq[1:],
                alpha=max(norm_hq),
                fitted_c=0.0,
            )
        )
    bases = [sobolev_norm(u0, p) for u0 in family]

    positive = [run.alpha for run in runs if run.alpha > 0]
    kappa = min(positive) * final_time if positive else 0.0
    for run, base in zip(runs, bases):
        steps = _window_steps(kappa, run.alpha, dt, max_steps)
        run.fit_time = times[steps - 1]
        run.fitted_c = _smallest_constant(run.norm_hp, base, run.alpha, times[:steps])

    calibration = int(np.argmax([run.alpha for run in runs]))
    c_fit = _smallest_constant(
        runs[calibration].norm_hp, bases[calibration], runs[calibration].alpha, times
    )

    constants = [run.fitted_c for run in runs if run.fitted_c > 0]
    stability = max(constants) / min(constants) if constants else 1.0
    slack = NumericsDefaults.GROWTH_SLACK

    for run, base in zip(runs, bases):
        bound = np.exp(slack * c_fit * run.alpha * np.array(run.times)) * base
        run.bounded = bool(np.all(np.array(run.norm_hp) <= bound * (1 + _BOUND_RTOL) + _BOUND_RTOL))
        if not run.bounded:
            custom_logger.warning(
                "⚠️ Run a=%.4g exceeds exp(%.2f·c·α·t) with c=%.4g", run.amplitude, slack, c_fit
            )

    report = GrowthReport(
        runs=runs,
        c_fit=c_fit,
        stability_factor=stability,
        slack=slack,
        calibration_index=calibration,
    )
    log = custom_logger.info if stability <= NumericsDefaults.GROWTH_STABILITY_FACTOR else custom_logger.warning
    log(
        "🌱 Growth constant c=%.4g from run %d, stability factor %.3f over %d runs",
        c_fit,
        calibration,
        stability,
        len(runs),
    )
    return report
