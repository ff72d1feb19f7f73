"""
Periodic grid and real grid functions.

- PeriodicGrid: N uniform nodes on [0, L), integer modes in FFT order and wavenumbers k_m = 2πm/L
- Field: immutable real samples u(x_j) with a lazily cached spectrum û_m = (1/N) Σ_j u(x_j) e^{-i k_m x_j}

The N/2 mode is stored at index N/2 (numpy FFT order, mode -N/2) and treated as real-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Union

import numpy as np

from splitting_core import DimensionError, NumericsDefaults

Scalar = Union[int, float]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


# =============================================================================
# 🧮 PeriodicGrid
# =============================================================================
@dataclass(frozen=True)
class PeriodicGrid:
    """
    Uniform N-point discretization of [0, L).

    Attributes:
        n_points: Number of samples N (even, >= 8)
        length: Domain length L (> 0)

    Example:
        >>> grid = PeriodicGrid(n_points=64, length=2 * np.pi)
        >>> grid.wavenumbers[1]
        1.0
    """

    n_points: int
    length: float

    def __post_init__(self) -> None:
        if int(self.n_points) != self.n_points:
            raise ValueError(f"n_points must be an integer, got {self.n_points}")
        if self.n_points < NumericsDefaults.MIN_POINTS:
            raise ValueError(
                f"n_points must be >= {NumericsDefaults.MIN_POINTS}, got {self.n_points}"
            )
        if self.n_points % 2 != 0:
            raise ValueError(f"n_points must be even, got {self.n_points}")
        if not self.length > 0:
            raise ValueError(f"length must be positive, got {self.length}")
        object.__setattr__(self, "n_points", int(self.n_points))
        object.__setattr__(self, "length", float(self.length))

    @cached_property
    def nodes(self) -> np.ndarray:
        """x_j = j L / N, j = 0..N-1 (excludes L)."""
        return _frozen(np.arange(self.n_points) * (self.length / self.n_points))

    @cached_property
    def modes(self) -> np.ndarray:
        """Integer modes in FFT order: 0, 1, ..., N/2-1, -N/2, ..., -1."""
        return _frozen(np.fft.fftfreq(self.n_points, d=1.0 / self.n_points).round().astype(int))

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """k_m = 2π m / L in FFT order; k_0 is exactly 0."""
        return _frozen(2.0 * np.pi * self.modes / self.length)

    @property
    def nyquist_index(self) -> int:
        return self.n_points // 2

    @property
    def spacing(self) -> float:
        return self.length / self.n_points

    @cached_property
    def dealias_mask(self) -> np.ndarray:
        """True for modes kept by the 2/3 rule (|m| <= N/3)."""
        cutoff = self.n_points * NumericsDefaults.DEALIAS_FRACTION
        return _frozen(np.abs(self.modes) <= cutoff)

    @property
    def dealias_cutoff(self) -> int:
        """Largest retained |m| under the 2/3 rule."""
        return int(np.floor(self.n_points * NumericsDefaults.DEALIAS_FRACTION))


# =============================================================================
# 🌊 Field
# =============================================================================
@dataclass(frozen=True, eq=False)
class Field:
    """
    Real-valued grid function; samples are copied and made read-only.

    Raises:
        DimensionError: If the sample count does not match the grid
    """

    grid: PeriodicGrid
    samples: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        samples = np.array(self.samples, dtype=float, copy=True)
        if samples.shape != (self.grid.n_points,):
            raise DimensionError(
                f"Field has shape {samples.shape}, grid expects ({self.grid.n_points},)"
            )
        object.__setattr__(self, "samples", _frozen(samples))

    # ------------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------------
    @classmethod
    def from_function(cls, grid: PeriodicGrid, fn: Callable[[np.ndarray], np.ndarray]) -> Field:
        return cls(grid, fn(grid.nodes))

    @classmethod
    def constant(cls, grid: PeriodicGrid, value: float) -> Field:
        return cls(grid, np.full(grid.n_points, float(value)))

    @classmethod
    def from_spectrum(cls, coefficients: np.ndarray, grid: PeriodicGrid) -> Field:
        """Inverse of `spectrum`; the imaginary residue of the synthesis is dropped."""
        coefficients = np.asarray(coefficients, dtype=complex)
        if coefficients.shape != (grid.n_points,):
            raise DimensionError(
                f"Spectrum has shape {coefficients.shape}, grid expects ({grid.n_points},)"
            )
        return cls(grid, np.fft.ifft(coefficients * grid.n_points).real)

    # ------------------------------------------------------------------------
    # Spectral view
    # ------------------------------------------------------------------------
    @cached_property
    def spectrum(self) -> np.ndarray:
        return _frozen(np.fft.fft(self.samples) / self.grid.n_points)

    # ------------------------------------------------------------------------
    # Pointwise arithmetic
    # ------------------------------------------------------------------------
    def _other_samples(self, other: Union[Field, Scalar]) -> Union[np.ndarray, float]:
        if isinstance(other, Field):
            if other.grid != self.grid:
                raise DimensionError("Fields live on different grids")
            return other.samples
        return float(other)

    def __add__(self, other: Union[Field, Scalar]) -> Field:
        return Field(self.grid, self.samples + self._other_samples(other))

    __radd__ = __add__

    def __sub__(self, other: Union[Field, Scalar]) -> Field:
        return Field(self.grid, self.samples - self._other_samples(other))

    def __rsub__(self, other: Scalar) -> Field:
        return Field(self.grid, float(other) - self.samples)

    def __mul__(self, other: Union[Field, Scalar]) -> Field:
        return Field(self.grid, self.samples * self._other_samples(other))

    __rmul__ = __mul__

    def __neg__(self) -> Field:
        return Field(self.grid, -self.samples)

    # ------------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------------
    def mean(self) -> float:
        return float(np.mean(self.samples))

    def reflect(self) -> Field:
        """x ↦ -x on the periodic grid: u(-x_j) = u(x_{(N-j) mod N})."""
        return Field(self.grid, np.roll(self.samples[::-1], 1))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.samples)))
