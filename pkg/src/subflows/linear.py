# =============================================================================
# 📉 Linear subflow v_t = P(∂x) v
# =============================================================================
from __future__ import annotations

import numpy as np

from dispersion import DispersionSymbol, symbol_values
from fourier import Field, PeriodicGrid, derivative_multiplier
from splitting_core import DissipativityError, NumericsDefaults, custom_logger


def generator_multiplier(symbol: DispersionSymbol, field: Field) -> np.ndarray:
    """Σ_j a_j (i k)^j with odd powers zeroed at N/2, i.e. the grid operator A = P(∂x)."""
    multiplier = np.zeros(field.grid.n_points, dtype=complex)
    for power, coefficient in symbol.terms():
        multiplier += coefficient * derivative_multiplier(field.grid, power)
    return multiplier


def apply_generator(field: Field, symbol: DispersionSymbol, times: int = 1) -> Field:
    """A^times applied to a field."""
    multiplier = generator_multiplier(symbol, field) ** times
    return Field.from_spectrum(field.spectrum * multiplier, field.grid)


def flow_exponent(
    symbol: DispersionSymbol, grid: PeriodicGrid, allow_growth: bool = False
) -> np.ndarray:
    """
    P(i k_m) per mode with the N/2 entry reduced to its real part.

    Raises:
        DissipativityError: If some Re P(i k_m) is positive beyond the relative
            tolerance and allow_growth is False
    """
    values = symbol_values(symbol, grid)
    nyquist = grid.nyquist_index
    values[nyquist] = values[nyquist].real  # N/2 mode is real-only

    tolerance = NumericsDefaults.DISSIPATIVITY_RTOL * float(np.max(np.abs(values)))
    worst = int(np.argmax(values.real))
    if values.real[worst] > tolerance and not allow_growth:
        mode = int(grid.modes[worst])
        message = (
            f"Linear flow would amplify mode {mode} "
            f"(Re P = {values.real[worst]:.6g}); pass allow_growth to override"
        )
        custom_logger.error("❌ %s", message)
        raise DissipativityError(message, mode, float(values.real[worst]))
    return values


def linear_flow(
    u: Field, t: float, symbol: DispersionSymbol, allow_growth: bool = False
) -> Field:
    """
    Exact semidiscrete flow: û_m <- exp(t P(i k_m)) û_m.

    Raises:
        ValueError: If t < 0
        DissipativityError: If some mode would grow and allow_growth is False
    """
    if t < 0:
        raise ValueError(f"Linear flow time must be nonnegative, got {t}")
    if t == 0:
        return u
    exponent = flow_exponent(symbol, u.grid, allow_growth)
    return Field.from_spectrum(u.spectrum * np.exp(t * exponent), u.grid)
