"""
Reference integrator for the full equation u_t = P(∂x)u + u u_x.

Integrating-factor RK4 in Lawson form: the linear part is propagated exactly by
E = exp(hA) and E½ = exp(hA/2), the dealiased nonlinearity by classical RK4.
It shares no code path with the splitting steps beyond the FFT and the symbol.
"""

from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np

from dispersion import DispersionSymbol
from fourier import Field, derivative_multiplier, sobolev_norm
from splitting_core import (BlowUpError, NumericsDefaults,
                            ReferenceInvalidError, ReferenceMetadata,
                            custom_logger)
from subflows import flow_exponent


def default_ref_dt(final_time: float, dt_min: float) -> float:
    """Largest T/n not exceeding dt_min / 20."""
    target = dt_min / NumericsDefaults.REFERENCE_DT_FACTOR
    return final_time / _reference_steps(final_time, target)


def _reference_steps(final_time: float, ref_dt: float) -> int:
    ratio = final_time / ref_dt
    return max(1, math.ceil(ratio - NumericsDefaults.DIVISIBILITY_TOL * max(1.0, ratio)))


def _integrate(
    u0: Field, final_time: float, symbol: DispersionSymbol, steps: int, allow_growth: bool
) -> Field:
    grid = u0.grid
    n = grid.n_points
    h = final_time / steps
    exponent = flow_exponent(symbol, grid, allow_growth)
    e_full = np.exp(h * exponent)
    e_half = np.exp(0.5 * h * exponent)
    ddx = derivative_multiplier(grid, 1)
    mask = grid.dealias_mask

    def nonlinear(coefficients: np.ndarray) -> np.ndarray:
        u = np.fft.ifft(coefficients * n).real
        u_x = np.fft.ifft(coefficients * ddx * n).real
        return np.where(mask, np.fft.fft(u * u_x) / n, 0.0)

    v = np.array(u0.spectrum, dtype=complex)
    with np.errstate(over="ignore", invalid="ignore"):
        for index in range(steps):
            k1 = nonlinear(v)
            k2 = nonlinear(e_half * (v + 0.5 * h * k1))
            k3 = nonlinear(e_half * v + 0.5 * h * k2)
            k4 = nonlinear(e_full * v + h * e_half * k3)
            v = e_full * v + (h / 6.0) * (e_full * k1 + 2.0 * e_half * (k2 + k3) + k4)
            if not np.all(np.isfinite(v)):
                custom_logger.error("🔥 Reference blow-up at step %d/%d", index + 1, steps)
                raise BlowUpError(f"Non-finite reference state at step {index + 1}/{steps}")
    return Field.from_spectrum(v, grid)


def reference_solution(
    u0: Field,
    final_time: float,
    symbol: DispersionSymbol,
    ref_dt: float,
    allow_growth: bool = False,
) -> Field:
    """
    Φ_{A+B}^T(u0) by integrating-factor RK4 with uniform steps of at most ref_dt.

    Raises:
        ValueError: Negative final time or non-positive ref_dt
        BlowUpError: NaN or overflow
    """
    if final_time < 0:
        raise ValueError(f"final_time must be nonnegative, got {final_time}")
    if not ref_dt > 0:
        raise ValueError(f"ref_dt must be positive, got {ref_dt}")
    if final_time == 0:
        return u0
    return _integrate(
        u0, final_time, symbol, _reference_steps(final_time, ref_dt), allow_growth
    )


def verified_reference(
    u0: Field,
    final_time: float,
    symbol: DispersionSymbol,
    ref_dt: float,
    r: int,
    threshold: Optional[float] = None,
    allow_growth: bool = False,
) -> Tuple[Field, ReferenceMetadata]:
    """
    Reference at ref_dt plus a rerun at ref_dt/2; the H^r change must stay below threshold.

    Returns the ref_dt/2 solution with metadata describing the ref_dt run.

    Raises:
        ReferenceInvalidError: If the self-convergence delta exceeds the threshold
    """
    threshold = NumericsDefaults.REFERENCE_SELF_CONVERGENCE if threshold is None else threshold
    if final_time == 0:
        return u0, ReferenceMetadata(ref_dt, 0, 0.0, threshold)

    steps = _reference_steps(final_time, ref_dt)
    coarse = _integrate(u0, final_time, symbol, steps, allow_growth)
    fine = _integrate(u0, final_time, symbol, 2 * steps, allow_growth)
    delta = sobolev_norm(coarse - fine, r)
    metadata = ReferenceMetadata(final_time / steps, steps, delta, threshold)

    if delta > threshold:
        custom_logger.error(
            "❌ Reference self-convergence %.3e above %.1e (ref_dt=%.3e)",
            delta,
            threshold,
            metadata.ref_dt,
        )
        raise ReferenceInvalidError(delta, threshold)

    custom_logger.info(
        "✅ Reference ready: %d steps, self-convergence %.2e", steps, delta
    )
    return fine, metadata
