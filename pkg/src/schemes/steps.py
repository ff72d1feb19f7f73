# =============================================================================
# 🪜 One-step splitting compositions
# =============================================================================
from __future__ import annotations

from typing import Callable, Dict, Optional

from dispersion import DispersionSymbol
from fourier import Field
from splitting_core import BurgersSolveOptions, SchemeKind
from subflows import burgers_flow, linear_flow

StepFunction = Callable[..., Field]


def _check_dt(dt: float) -> None:
    if dt < 0:
        raise ValueError(f"dt must be nonnegative, got {dt}")


def strang_step(
    u: Field,
    dt: float,
    symbol: DispersionSymbol,
    opts: Optional[BurgersSolveOptions] = None,
    allow_growth: bool = False,
) -> Field:
    """
    Φ_A^{dt/2} ∘ Φ_B^{dt} ∘ Φ_A^{dt/2}.

    The Burgers guard is evaluated on the field after the first half-flow.

    Raises:
        StepTooLargeError: From the Burgers substep
    """
    _check_dt(dt)
    if dt == 0:
        return u
    half = 0.5 * dt
    v = linear_flow(u, half, symbol, allow_growth)
    w = burgers_flow(v, dt, opts)
    return linear_flow(w, half, symbol, allow_growth)


def lie_step(
    u: Field,
    dt: float,
    symbol: DispersionSymbol,
    opts: Optional[BurgersSolveOptions] = None,
    allow_growth: bool = False,
) -> Field:
    """Φ_A^{dt} ∘ Φ_B^{dt}: Burgers first, then the linear flow."""
    _check_dt(dt)
    if dt == 0:
        return u
    w = burgers_flow(u, dt, opts)
    return linear_flow(w, dt, symbol, allow_growth)


STEP_FUNCTIONS: Dict[SchemeKind, StepFunction] = {
    SchemeKind.LIE: lie_step,
    SchemeKind.STRANG: strang_step,
}


def step_function(scheme: SchemeKind) -> StepFunction:
    return STEP_FUNCTIONS[SchemeKind(scheme)]
