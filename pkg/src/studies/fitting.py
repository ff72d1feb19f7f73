# =============================================================================
# 📐 Order fitting on (log Δt, log error)
# =============================================================================
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from splitting_core import InsufficientDataError, NumericsDefaults


@dataclass(frozen=True)
class OrderFit:
    slope: float
    residual: float
    points: int


def _as_positive(values: Sequence[float], name: str) -> np.ndarray:
    array = np.asarray(values, dtype=float)
    if np.any(~np.isfinite(array)) or np.any(array <= 0):
        raise ValueError(f"{name} must be positive and finite")
    return array


def fit_order(dts: Sequence[float], errors: Sequence[float]) -> OrderFit:
    """
    Least-squares slope of log(error) against log(dt).

    The residual is the max absolute deviation of log(error) from the fitted line.

    Raises:
        InsufficientDataError: Fewer than MIN_FIT_POINTS points
        ValueError: Non-positive or non-finite values, or mismatched lengths
    """
    if len(dts) != len(errors):
        raise ValueError(f"{len(dts)} step sizes but {len(errors)} errors")
    if len(dts) < NumericsDefaults.MIN_FIT_POINTS:
        raise InsufficientDataError(
            f"Order fit needs >= {NumericsDefaults.MIN_FIT_POINTS} points, got {len(dts)}"
        )
    log_dt = np.log(_as_positive(dts, "dts"))
    log_err = np.log(_as_positive(errors, "errors"))
    slope, intercept = np.polyfit(log_dt, log_err, 1)
    residual = float(np.max(np.abs(log_err - (slope * log_dt + intercept))))
    return OrderFit(float(slope), residual, len(dts))


def pairwise_orders(dts: Sequence[float], errors: Sequence[float]) -> List[float]:
    """Observed order between each adjacent pair of rows."""
    dt = _as_positive(dts, "dts")
    err = _as_positive(errors, "errors")
    return [
        float(np.log(err[i] / err[i + 1]) / np.log(dt[i] / dt[i + 1]))
        for i in range(len(dt) - 1)
    ]


def admissible_mask(errors: Sequence[float], reference_delta: float) -> List[bool]:
    """Rows whose error is finite and at least ADMISSIBILITY_FACTOR x the reference delta."""
    floor = NumericsDefaults.ADMISSIBILITY_FACTOR * reference_delta
    return [bool(np.isfinite(e) and e > 0 and e >= floor) for e in errors]


def is_under_resolved(mask: Sequence[bool]) -> bool:
    """More than MAX_DROPPED_ROWS rows dropped, or too few left to fit."""
    dropped = len(mask) - sum(mask)
    return (
        dropped > NumericsDefaults.MAX_DROPPED_ROWS
        or sum(mask) < NumericsDefaults.MIN_FIT_POINTS
    )
