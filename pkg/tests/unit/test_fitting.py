# =============================================================================
# 🧩 Test Module: test_fitting.py
# =============================================================================
import math
from dataclasses import dataclass
from typing import List

import numpy as np
import pytest

from splitting_core import (ConvergenceRow, InsufficientDataError,
                            ReferenceMetadata)
from studies import (admissible_mask, fit_order, is_under_resolved,
                     pairwise_orders, tabulate)

DTS = [0.1, 0.05, 0.025, 0.0125]


# =============================================================================
# 🔧 Test Config
# =============================================================================
@dataclass(frozen=True)
class PowerLawCase:
    order: float
    constant: float


power_law_cases = [PowerLawCase(1.0, 0.7), PowerLawCase(2.0, 3.0), PowerLawCase(3.0, 1e-2)]


@dataclass(frozen=True)
class MaskCase:
    mask: List[bool]
    under_resolved: bool


mask_cases = [
    MaskCase([True, True, True, True], False),
    MaskCase([False, True, True, True], False),
    MaskCase([False, False, True, True, True], False),
    MaskCase([False, False, False, True, True, True], True),
    MaskCase([True, True, False, False], True),
]


def _row(dt: float, err: float) -> ConvergenceRow:
    return ConvergenceRow(dt=dt, err_hr=err, err_hq=2 * err, err_l2=err, wallclock_s=0.0)


# =============================================================================
# 📐 fit_order & pairwise_orders
# =============================================================================
@pytest.mark.parametrize("case", power_law_cases, ids=lambda c: f"order{c.order:g}")
def test_fit_recovers_power_law(case: PowerLawCase) -> None:
    """Exact power laws give their exponent."""
    errors = [case.constant * dt**case.order for dt in DTS]
    fit = fit_order(DTS, errors)
    assert fit.slope == pytest.approx(case.order, abs=1e-12)
    assert fit.residual < 1e-12
    assert fit.points == len(DTS)
    assert pairwise_orders(DTS, errors) == pytest.approx([case.order] * 3, abs=1e-12)


def test_fit_residual_reports_scatter() -> None:
    """Scattered errors report a large residual."""
    errors = [dt**2 for dt in DTS]
    errors[1] *= math.e
    assert fit_order(DTS, errors).residual > 0.5


def test_fit_input_errors() -> None:
    """Too few, non-positive or mismatched inputs raise."""
    with pytest.raises(InsufficientDataError):
        fit_order(DTS[:2], [1.0, 0.5])
    with pytest.raises(ValueError):
        fit_order(DTS, [1.0, 0.5, 0.0, 0.1])
    with pytest.raises(ValueError):
        fit_order(DTS, [1.0, 0.5, math.nan, 0.1])
    with pytest.raises(ValueError):
        fit_order(DTS, [1.0, 0.5])


# =============================================================================
# 🧹 Admissibility
# =============================================================================
def test_admissible_mask_uses_reference_floor() -> None:
    """Rows below 100× the reference delta or non-finite are dropped."""
    mask = admissible_mask([1e-3, 2e-11, 1e-12, math.nan, 0.0], reference_delta=1e-13)
    assert mask == [True, True, False, False, False]


@pytest.mark.parametrize("case", mask_cases)
def test_is_under_resolved(case: MaskCase) -> None:
    """More than two drops or fewer than three survivors flag the study."""
    assert is_under_resolved(case.mask) is case.under_resolved


def test_tabulate_sorts_and_fits_admissible_rows() -> None:
    """Rows are sorted by dt and floored rows are flagged."""
    rows = [_row(dt, 5.0 * dt**2) for dt in reversed(DTS)]
    rows.append(_row(0.00625, 1e-14))
    reference = ReferenceMetadata(ref_dt=1e-4, steps=10, self_convergence_delta=1e-15, threshold=1e-10)

    table = tabulate(rows, reference)

    assert [row.dt for row in table.rows] == sorted([row.dt for row in rows], reverse=True)
    assert not table.rows[-1].admissible
    assert table.rows[-1].flag == "below reference floor"
    assert len(table.admissible_rows) == 4
    assert not table.under_resolved
    assert table.fitted_order_hr == pytest.approx(2.0, abs=1e-10)
    assert table.fitted_order_hq == pytest.approx(2.0, abs=1e-10)
    assert len(table.pairwise_orders_hr) == 3


def test_tabulate_of_zero_errors_is_under_resolved() -> None:
    """All-zero errors leave nothing to fit."""
    table = tabulate([_row(dt, 0.0) for dt in DTS], None)
    assert table.under_resolved
    assert table.admissible_rows == []
    assert np.isnan(table.fitted_order_hr)
