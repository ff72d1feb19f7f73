"""
Initial-condition families and a descriptor that builds them on a grid.

Families: sine, gaussian, soliton, random-bandlimited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping

import numpy as np

from fourier import Field, PeriodicGrid
from splitting_core import ConfigurationError

from .analytic import soliton_profile


def sine(grid: PeriodicGrid, amplitude: float = 0.5, mode: int = 1) -> Field:
    """a sin(2π m x / L)."""
    if not 1 <= mode < grid.nyquist_index:
        raise ValueError(f"sine mode must lie in [1, N/2), got {mode}")
    return Field(grid, amplitude * np.sin(grid.wavenumbers[mode] * grid.nodes))


def gaussian(
    grid: PeriodicGrid, amplitude: float = 1.0, width: float = 0.5, center: float | None = None
) -> Field:
    """a exp(-(d/width)²) with d the periodic distance to the centre."""
    if not width > 0:
        raise ValueError(f"gaussian width must be positive, got {width}")
    center = 0.5 * grid.length if center is None else center
    d = np.mod(grid.nodes - center + 0.5 * grid.length, grid.length) - 0.5 * grid.length
    return Field(grid, amplitude * np.exp(-((d / width) ** 2)))


def soliton(grid: PeriodicGrid, c: float = 0.3, center: float | None = None) -> Field:
    """KdV travelling wave at t = 0, centred at L/2 unless told otherwise."""
    center = 0.5 * grid.length if center is None else center
    return Field(grid, soliton_profile(grid.nodes, 0.0, c, center, grid.length))


def random_bandlimited(
    grid: PeriodicGrid, max_mode: int = 8, amplitude: float = 1.0, seed: int = 0
) -> Field:
    """
    Seeded random field with modes 1..max_mode, zero mean, scaled to |u|_inf = amplitude.

    Coefficients are complex normal with 1/m decay.
    """
    if not 1 <= max_mode < grid.nyquist_index:
        raise ValueError(f"max_mode must lie in [1, N/2), got {max_mode}")
    rng = np.random.default_rng(seed)
    modes = np.arange(1, max_mode + 1)
    coefficients = np.zeros(grid.n_points, dtype=complex)
    draws = rng.standard_normal(max_mode) + 1j * rng.standard_normal(max_mode)
    coefficients[modes] = draws / modes
    coefficients[-modes] = np.conj(coefficients[modes])
    raw = Field.from_spectrum(coefficients, grid)
    peak = float(np.max(np.abs(raw.samples)))
    return raw * (amplitude / peak)


FAMILIES: Dict[str, Callable[..., Field]] = {
    "sine": sine,
    "gaussian": gaussian,
    "soliton": soliton,
    "random-bandlimited": random_bandlimited,
}


@dataclass(frozen=True)
class InitialConditionSpec:
    """Named family plus keyword parameters; `build` evaluates it on a grid."""

    family: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ConfigurationError(
                f"unknown family {self.family!r}; expected one of {sorted(FAMILIES)}",
                "initial_condition.family",
            )

    def build(self, grid: PeriodicGrid) -> Field:
        try:
            return FAMILIES[self.family](grid, **dict(self.params))
        except (TypeError, ValueError) as e:
            raise ConfigurationError(str(e), "initial_condition") from e

    def describe(self) -> Dict[str, Any]:
        return {"family": self.family, **dict(self.params)}
