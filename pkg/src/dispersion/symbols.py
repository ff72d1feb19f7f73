# =============================================================================
# 📐 Dispersion symbols P(X) = Σ_{j=2}^{ℓ} a_j X^j
# =============================================================================
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Tuple

import numpy as np

from fourier import PeriodicGrid
from splitting_core import DissipativityError, NumericsDefaults, custom_logger


@dataclass(frozen=True)
class DispersionSymbol:
    """
    Real polynomial P of degree ℓ >= 2 without constant or linear term.

    `coefficients[j]` is a_j for j = 0..ℓ; a_0 = a_1 = 0 and a_ℓ != 0.
    """

    coefficients: Tuple[float, ...]

    def __post_init__(self) -> None:
        coefficients = tuple(float(a) for a in self.coefficients)
        if len(coefficients) < 3:
            raise ValueError("Dispersion symbol needs degree >= 2")
        if coefficients[0] != 0.0 or coefficients[1] != 0.0:
            raise ValueError("Dispersion symbol must have a_0 = a_1 = 0")
        if coefficients[-1] == 0.0:
            raise ValueError("Leading coefficient a_ℓ must be nonzero")
        if not all(np.isfinite(coefficients)):
            raise ValueError("Dispersion coefficients must be finite")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_terms(cls, terms: Mapping[int, float]) -> DispersionSymbol:
        """Build from {power: coefficient}; zero entries are allowed and dropped."""
        nonzero = {int(j): float(a) for j, a in terms.items() if a != 0.0}
        if not nonzero:
            raise ValueError("Dispersion symbol has no nonzero terms")
        degree = max(nonzero)
        return cls(tuple(nonzero.get(j, 0.0) for j in range(degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def terms(self) -> Iterator[Tuple[int, float]]:
        """Nonzero (power, coefficient) pairs in increasing power."""
        for power, coefficient in enumerate(self.coefficients):
            if coefficient != 0.0:
                yield power, coefficient

    def as_dict(self) -> Dict[int, float]:
        return dict(self.terms())

    def evaluate(self, xi: np.ndarray) -> np.ndarray:
        """P(iξ) for real ξ."""
        xi = np.asarray(xi, dtype=float)
        values = np.zeros(xi.shape, dtype=complex)
        for power, coefficient in self.terms():
            values += coefficient * (1j * xi) ** power
        return values

    def describe(self) -> str:
        parts: List[str] = []
        for power, coefficient in sorted(self.terms(), reverse=True):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            body = f"X^{power}" if magnitude == 1.0 else f"{magnitude:g}·X^{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def symbol_values(symbol: DispersionSymbol, grid: PeriodicGrid) -> np.ndarray:
    """P(i k_m) for every grid mode, FFT order."""
    return symbol.evaluate(grid.wavenumbers)


# =============================================================================
# ✅ Condition Re P(iξ) <= 0
# =============================================================================
@dataclass(frozen=True)
class DissipativityReport:
    passed: bool
    max_real_part: float
    tolerance: float
    violating_modes: Tuple[int, ...] = field(default_factory=tuple)
    worst_mode: int = 0

    @property
    def max_positive_real_part(self) -> float:
        return max(self.max_real_part, 0.0)


def validate_dissipativity(
    symbol: DispersionSymbol, grid: PeriodicGrid, strict: bool = True
) -> DissipativityReport:
    """
    Check Re P(i k_m) <= 1e-12 * max|P(ik)| on every grid mode.

    Raises:
        DissipativityError: In strict mode, naming the worst violating mode
    """
    values = symbol_values(symbol, grid)
    tolerance = NumericsDefaults.DISSIPATIVITY_RTOL * float(np.max(np.abs(values)))
    real = values.real
    violating = np.flatnonzero(real > tolerance)
    worst_index = int(np.argmax(real))
    modes = sorted(int(m) for m in grid.modes[violating])

    report = DissipativityReport(
        passed=violating.size == 0,
        max_real_part=float(real[worst_index]),
        tolerance=tolerance,
        violating_modes=tuple(modes),
        worst_mode=int(grid.modes[worst_index]),
    )

    if not report.passed:
        message = (
            f"Re P(ik) > 0 at modes {list(report.violating_modes)} "
            f"(worst mode {report.worst_mode}, Re P = {report.max_real_part:.6g})"
        )
        if strict:
            custom_logger.error("❌ %s", message)
            raise DissipativityError(message, report.worst_mode, report.max_real_part)
        custom_logger.warning("⚠️ %s; continuing in non-strict mode", message)

    return report
