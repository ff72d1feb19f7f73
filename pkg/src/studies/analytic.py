# =============================================================================
# 🧪 KdV travelling wave for u_t = u_xxx + u u_x
# =============================================================================
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
import sympy as sp

_x, _t, _c, _x0 = sp.symbols("x t c x0", real=True)


def soliton_expression() -> sp.Expr:
    """3c sech²(½√c (x - x0 + c t)), moving left with speed c."""
    return 3 * _c / sp.cosh(sp.sqrt(_c) / 2 * (_x - _x0 + _c * _t)) ** 2


def residual_expression() -> sp.Expr:
    """u_t - u_xxx - u u_x for the soliton; identically zero when the ansatz is right."""
    u = soliton_expression()
    return sp.diff(u, _t) - sp.diff(u, _x, 3) - u * sp.diff(u, _x)


@lru_cache(maxsize=None)
def _compiled() -> Tuple[Callable, Callable]:
    args = (_x, _t, _c, _x0)
    profile = sp.lambdify(args, soliton_expression(), modules="numpy")
    residual = sp.lambdify(args, residual_expression(), modules="numpy")
    return profile, residual


def soliton_profile(
    x: np.ndarray,
    t: float,
    c: float,
    center: float = 0.0,
    length: Optional[float] = None,
) -> np.ndarray:
    """
    Evaluate the travelling wave at points x and time t.

    With `length` the displacement x - center + c t is wrapped to [-L/2, L/2),
    giving the periodic copy centred in its own cell.
    """
    if not c > 0:
        raise ValueError(f"Soliton speed must be positive, got {c}")
    x = np.asarray(x, dtype=float)
    shift = x - center + c * t
    if length is not None:
        shift = np.mod(shift + 0.5 * length, length) - 0.5 * length
    profile, _ = _compiled()
    return np.asarray(profile(shift, 0.0, c, 0.0), dtype=float)


def soliton_residual(c: float, points: np.ndarray, t: float = 0.0) -> float:
    """Max |u_t - u_xxx - u u_x| of the ansatz over the given displacements."""
    _, residual = _compiled()
    values = residual(np.asarray(points, dtype=float), t, c, 0.0)
    return float(np.max(np.abs(values)))
