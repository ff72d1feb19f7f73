# =============================================================================
# 🔺 Burgers nonlinearity B(u) = u u_x and its shock time
# =============================================================================
from __future__ import annotations

import math

import numpy as np

from fourier import Field, dealiased_product, derivative, linf_norm

# Slopes below this multiple of the rounding level count as "no gradient"
_SLOPE_NOISE_FACTOR = 64.0


def apply_B(u: Field) -> Field:
    """dealias(u · ∂x u)."""
    return dealiased_product(u, derivative(u, 1))


def shock_time(u: Field) -> float:
    """
    Gradient blow-up time 1 / max_j u'(x_j) of w_t = w w_x started from u.

    Returns +inf when no node has a positive slope above rounding noise.
    """
    slopes = derivative(u, 1).samples
    max_slope = float(np.max(slopes))
    k_max = float(np.max(np.abs(u.grid.wavenumbers)))
    noise = _SLOPE_NOISE_FACTOR * np.finfo(float).eps * max(1.0, linf_norm(u) * k_max)
    if max_slope <= noise:
        return math.inf
    return 1.0 / max_slope
