# =============================================================================
# 🌊 Burgers subflow w_t = w w_x (smooth regime only)
# =============================================================================
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fourier import Field, dealias, derivative, interpolate, linf_norm, sobolev_norm
from splitting_core import (BlowUpError, BurgersMethod, BurgersSolveOptions,
                            NonConvergenceError, NumericsDefaults,
                            StepTooLargeError, custom_logger)

from .nonlinear import apply_B, shock_time


# -----------------------------------------------------------------------------
# 🛡️ Shock guard
# -----------------------------------------------------------------------------
def check_substep(u0: Field, t: float, opts: BurgersSolveOptions) -> float:
    """
    Enforce t <= safety_fraction * shock_time(u0); returns the shock time.

    Raises:
        StepTooLargeError: If the substep crosses the guard
    """
    if t < 0:
        raise ValueError(f"Burgers substep must be nonnegative, got {t}")
    horizon = shock_time(u0)
    if t > opts.safety_fraction * horizon:
        custom_logger.error(
            "❌ Burgers substep %.6g beyond %.3g x shock_time %.6g",
            t,
            opts.safety_fraction,
            horizon,
        )
        raise StepTooLargeError(t, horizon, opts.safety_fraction)
    return horizon


# -----------------------------------------------------------------------------
# 📐 Characteristics
# -----------------------------------------------------------------------------
def _damping(u0: Field, t: float) -> float:
    """
    Relaxation weight θ for w <- (1-θ) w + θ u0(x + t w).

    The plain map has slope λ = t u0' in [λ_min, λ_max]; θ = 2 / (2 - λ_min - λ_max)
    centres the relaxed slope around zero, giving contraction
    (λ_max - λ_min) / (2 - λ_min - λ_max) < 1 whenever λ_max < 1.
    """
    slopes = derivative(u0, 1).samples
    lam_min = t * float(np.min(slopes))
    lam_max = t * float(np.max(slopes))
    return 2.0 / (2.0 - lam_min - lam_max)


def burgers_flow(
    u0: Field, t: float, opts: Optional[BurgersSolveOptions] = None
) -> Field:
    """
    Solve w = u0(x_j + t w) at every node by damped fixed-point iteration.

    The off-grid values of u0 come from its trigonometric interpolant, so the
    result is the exact Burgers flow of the band-limited data up to `tolerance`.

    Raises:
        StepTooLargeError: t beyond the shock guard
        NonConvergenceError: max_iterations exhausted
    """
    opts = opts or BurgersSolveOptions()
    if opts.method is BurgersMethod.SPECTRAL_RK4:
        return burgers_flow_rk(u0, t, opts)

    check_substep(u0, t, opts)
    if t == 0:
        return u0

    nodes = u0.grid.nodes
    theta = _damping(u0, t)
    tolerance = opts.tolerance * max(1.0, linf_norm(u0))

    # Per-node update; the only reduction is the stopping test
    w = u0.samples.copy()
    residual = math.inf
    for iteration in range(1, opts.max_iterations + 1):
        target = interpolate(u0, nodes + t * w)
        residual = float(np.max(np.abs(w - target)))
        if residual <= tolerance:
            custom_logger.debug(
                "Characteristics converged in %d iterations (residual %.2e)",
                iteration,
                residual,
            )
            break
        w = w + theta * (target - w)
    else:
        custom_logger.error(
            "❌ Characteristic solve stalled at residual %.3e", residual
        )
        raise NonConvergenceError(opts.max_iterations, residual)

    result = Field(u0.grid, w)
    return dealias(result) if opts.dealias_output else result


# -----------------------------------------------------------------------------
# 🔁 Spectral RK4
# -----------------------------------------------------------------------------
def default_rk_substeps(u0: Field, t: float, opts: BurgersSolveOptions) -> int:
    """Smallest count keeping each substep inside the guard and the RK4 CFL bound."""
    if t == 0:
        return 1
    guard = opts.safety_fraction * shock_time(u0)
    k_cut = 2.0 * np.pi * u0.grid.dealias_cutoff / u0.grid.length
    amplitude = linf_norm(u0)
    cfl = (
        NumericsDefaults.RK_STABILITY_NUMBER / (amplitude * k_cut)
        if amplitude > 0
        else math.inf
    )
    h = min(guard, cfl)
    return 1 if math.isinf(h) else max(1, math.ceil(t / h))


def burgers_flow_rk(
    u0: Field, t: float, opts: Optional[BurgersSolveOptions] = None
) -> Field:
    """
    Classical RK4 on dw/dt = dealias(w w_x) with uniform substeps.

    Raises:
        StepTooLargeError: t beyond the shock guard
        BlowUpError: NaN or overflow in any substep
    """
    opts = opts or BurgersSolveOptions(method=BurgersMethod.SPECTRAL_RK4)
    check_substep(u0, t, opts)
    if t == 0:
        return u0

    substeps = opts.rk_substeps or default_rk_substeps(u0, t, opts)
    h = t / substeps
    w = u0
    with np.errstate(over="ignore", invalid="ignore"):
        for index in range(substeps):
            k1 = apply_B(w)
            k2 = apply_B(w + (0.5 * h) * k1)
            k3 = apply_B(w + (0.5 * h) * k2)
            k4 = apply_B(w + h * k3)
            w = w + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not w.is_finite():
                custom_logger.error("🔥 RK4 Burgers blow-up at substep %d", index + 1)
                raise BlowUpError(
                    f"Non-finite values in RK4 Burgers substep {index + 1}/{substeps}"
                )
    return w


# -----------------------------------------------------------------------------
# 📏 Norm doubling horizon
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class DoublingResult:
    time: float
    reached: bool
    base_norm: float
    final_norm: float


def norm_doubling_time(
    u0: Field,
    m: int,
    dt: float,
    opts: Optional[BurgersSolveOptions] = None,
    max_steps: int = 10_000,
) -> DoublingResult:
    """
    First substep time with |Φ_B^t u0|_{H^m} > 2 |u0|_{H^m}.

    Substeps of size dt are taken while the shock guard allows them; if the guard
    binds first, the guard-limited time is returned with reached=False.
    """
    opts = opts or BurgersSolveOptions()
    base = sobolev_norm(u0, m)
    if base == 0.0:
        return DoublingResult(math.inf, False, 0.0, 0.0)

    w, t, norm = u0, 0.0, base
    for _ in range(max_steps):
        if dt > opts.safety_fraction * shock_time(w):
            custom_logger.info("⚠️ Shock guard bound before doubling at t=%.4g", t)
            return DoublingResult(t, False, base, norm)
        w = burgers_flow(w, dt, opts)
        t += dt
        norm = sobolev_norm(w, m)
        if norm > 2.0 * base:
            return DoublingResult(t, True, base, norm)
    return DoublingResult(t, False, base, norm)
