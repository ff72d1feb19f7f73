"""
Discrete norms: H^s with weight (1 + k²)^s, L², and max-norm.
"""

from __future__ import annotations

import numpy as np

from .grid import Field


def sobolev_weights(f: Field, s: int) -> np.ndarray:
    return (1.0 + f.grid.wavenumbers**2) ** s


def sobolev_norm(f: Field, s: int) -> float:
    """sqrt(L Σ_m (1 + k_m²)^s |û_m|²)."""
    if s < 0 or int(s) != s:
        raise ValueError(f"Sobolev index must be a nonnegative integer, got {s}")
    energy = np.sum(sobolev_weights(f, int(s)) * np.abs(f.spectrum) ** 2)
    return float(np.sqrt(f.grid.length * energy))


def l2_norm(f: Field) -> float:
    """Grid L² norm sqrt((L/N) Σ_j u(x_j)²)."""
    return float(np.sqrt(f.grid.spacing * np.sum(f.samples**2)))


def linf_norm(f: Field) -> float:
    return float(np.max(np.abs(f.samples)))


def relative_linf_error(candidate: Field, reference: Field, atol: float = 0.0) -> float:
    """
    |candidate - reference|_inf / |reference|_inf.

    Differences at or below `atol` count as exact agreement, so two routes that both
    return rounding noise for a vanishing result report 0.
    """
    diff = linf_norm(candidate - reference)
    if diff <= atol:
        return 0.0
    scale = linf_norm(reference)
    if scale == 0.0:
        return float("inf")
    return diff / scale
