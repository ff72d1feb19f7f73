# =============================================================================
# 🔬 One-step (local) error study
# =============================================================================
from __future__ import annotations

from typing import Optional, Sequence

from dispersion import DispersionSymbol, indices_for
from fourier import Field, l2_norm, sobolev_norm
from schemes import step_function, verified_reference
from splitting_core import (BurgersSolveOptions, ConvergenceRow,
                            ConvergenceTable, NumericsDefaults,
                            ReferenceMetadata, SchemeKind, custom_logger)

from .convergence import tabulate


def local_error_study(
    u0: Field,
    dt_list: Sequence[float],
    symbol: DispersionSymbol,
    r: int,
    scheme: SchemeKind = SchemeKind.STRANG,
    opts: Optional[BurgersSolveOptions] = None,
    reference_substeps: int = NumericsDefaults.REFERENCE_DT_FACTOR,
    allow_growth: bool = False,
) -> ConvergenceTable:
    """
    One step of the scheme against the reference at every Δt; slopes in H^r and H^q.

    Strang is expected near 3 in H^r and at least 2 in H^q; Lie near 2.
    Each one-step reference is self-checked at dt/reference_substeps and half of it;
    the table carries the metadata of the loosest one as its admissibility floor.

    Raises:
        ValueError: Empty list or a non-positive Δt
        ReferenceInvalidError: A one-step reference fails its self-convergence check
    """
    if not dt_list:
        raise ValueError("dt_list must not be empty")
    if any(not dt > 0 for dt in dt_list):
        raise ValueError("Local error is undefined for dt <= 0")

    _, q, _ = indices_for(r, symbol.degree).as_tuple()
    step = step_function(scheme)
    rows = []
    loosest: Optional[ReferenceMetadata] = None
    for dt in sorted(dt_list, reverse=True):
        split = step(u0, dt, symbol, opts, allow_growth=allow_growth)
        exact, metadata = verified_reference(
            u0, dt, symbol, dt / reference_substeps, r, allow_growth=allow_growth
        )
        if loosest is None or metadata.self_convergence_delta > loosest.self_convergence_delta:
            loosest = metadata
        diff = split - exact
        rows.append(
            ConvergenceRow(
                dt=dt,
                err_hr=sobolev_norm(diff, r),
                err_hq=sobolev_norm(diff, q),
                err_l2=l2_norm(diff),
                wallclock_s=0.0,
            )
        )
        custom_logger.debug("Local error at dt=%.3e: H^r %.3e", dt, rows[-1].err_hr)

    table = tabulate(rows, loosest)
    custom_logger.info(
        "🔬 %s local slopes: H^r %.3f, H^q %.3f",
        scheme.value,
        table.fitted_order_hr,
        table.fitted_order_hq,
    )
    return table
