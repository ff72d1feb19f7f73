"""
Spectral operators on periodic fields: transforms, differentiation, 2/3 dealiasing,
and off-grid trigonometric interpolation.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from splitting_core import DimensionError

from .grid import Field, PeriodicGrid


# =============================================================================
# 🔁 Transforms
# =============================================================================
def to_spectrum(f: Field) -> np.ndarray:
    """Coefficients û_m = (1/N) Σ_j u(x_j) e^{-i k_m x_j} in FFT order."""
    return f.spectrum


def from_spectrum(coefficients: np.ndarray, grid: PeriodicGrid) -> Field:
    """Synthesize samples from coefficients in FFT order."""
    return Field.from_spectrum(coefficients, grid)


# =============================================================================
# ∂ Differentiation
# =============================================================================
def derivative_multiplier(grid: PeriodicGrid, order: int) -> np.ndarray:
    """(i k_m)^order with the N/2 mode zeroed for odd orders."""
    multiplier = (1j * grid.wavenumbers) ** order
    if order % 2 == 1:
        multiplier[grid.nyquist_index] = 0.0
    return multiplier


def derivative(f: Field, order: int) -> Field:
    """
    Spectral derivative ∂x^order.

    Raises:
        ValueError: If order is negative or above N/4
    """
    if order < 0:
        raise ValueError(f"Derivative order must be nonnegative, got {order}")
    if order > f.grid.n_points // 4:
        raise ValueError(
            f"Derivative order {order} exceeds N/4 = {f.grid.n_points // 4}"
        )
    if order == 0:
        return f
    return Field.from_spectrum(f.spectrum * derivative_multiplier(f.grid, order), f.grid)


# =============================================================================
# ✂️ Dealiasing
# =============================================================================
def dealias(f: Field) -> Field:
    """2/3 rule: zero every mode with |m| > N/3."""
    return Field.from_spectrum(np.where(f.grid.dealias_mask, f.spectrum, 0.0), f.grid)


def dealiased_product(a: Field, b: Field) -> Field:
    """Pointwise product followed by the 2/3 filter."""
    return dealias(a * b)


# =============================================================================
# 📍 Off-grid evaluation
# =============================================================================
def interpolate(f: Field, points: Union[Sequence[float], np.ndarray]) -> np.ndarray:
    """
    Evaluate the trigonometric interpolant Σ_m û_m e^{i k_m x} at arbitrary points.

    Points are reduced modulo L. The N/2 mode contributes its real part times cos(k x),
    which keeps the interpolant real and exact at the nodes.
    """
    grid = f.grid
    x = np.mod(np.asarray(points, dtype=float), grid.length)
    if x.ndim != 1:
        raise DimensionError(f"points must be one-dimensional, got shape {x.shape}")

    half = grid.nyquist_index
    coefficients = f.spectrum
    k_positive = grid.wavenumbers[1:half]
    k_nyquist = np.pi * grid.n_points / grid.length

    phases = np.exp(1j * np.outer(x, k_positive))
    values = coefficients[0].real + 2.0 * (phases @ coefficients[1:half]).real
    values += coefficients[half].real * np.cos(k_nyquist * x)
    return values
