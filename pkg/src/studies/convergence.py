"""
Global convergence studies: evolve at every Δt of a list, compare the final field
to a verified reference, and fit orders in H^r and H^q.

Rows run concurrently in a thread pool; the table is always assembled in
decreasing-Δt order so results never depend on completion order.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from dispersion import EquationPreset, indices_for, validate_dissipativity
from fourier import Field, PeriodicGrid, l2_norm, sobolev_norm
from schemes import default_ref_dt, evolve, verified_reference
from splitting_core import (BurgersSolveOptions, ConvergenceRow,
                            ConvergenceTable, GuardViolationError, Monitor,
                            NumericsDefaults, ReferenceMetadata,
                            RuntimeConfig, SchemeKind, StepPlan,
                            custom_logger)

from .fitting import (admissible_mask, fit_order, is_under_resolved,
                      pairwise_orders)
from .initial_conditions import InitialConditionSpec

MIN_DT_ENTRIES = 4
MIN_OCTAVES = 3


# =============================================================================
# 🧾 Study definition
# =============================================================================
@dataclass(frozen=True)
class StudySpec:
    """
    One convergence study: equation, grid, initial data, scheme and Δt list.

    Invariants: every Δt divides final_time to 1e-12; at least four Δt values
    spanning at least three octaves.
    """

    preset: EquationPreset
    grid: PeriodicGrid
    initial_condition: InitialConditionSpec
    r: int
    final_time: float
    dt_list: Tuple[float, ...]
    scheme: SchemeKind = SchemeKind.STRANG
    ref_dt: Optional[float] = None
    burgers_options: BurgersSolveOptions = field(default_factory=BurgersSolveOptions)
    strict: bool = True
    record_wallclock: bool = False

    def __post_init__(self) -> None:
        dts = tuple(sorted((float(dt) for dt in self.dt_list), reverse=True))
        object.__setattr__(self, "dt_list", dts)
        if not self.final_time > 0:
            raise ValueError(f"final_time must be positive, got {self.final_time}")
        if len(dts) < MIN_DT_ENTRIES:
            raise ValueError(f"dt_list needs >= {MIN_DT_ENTRIES} entries, got {len(dts)}")
        if dts[-1] <= 0:
            raise ValueError("dt_list entries must be positive")
        if dts[0] / dts[-1] < 2**MIN_OCTAVES * (1 - 1e-12):
            raise ValueError(f"dt_list must span >= {MIN_OCTAVES} octaves")
        for dt in dts:
            n = round(self.final_time / dt)
            if n < 1 or abs(n * dt - self.final_time) > NumericsDefaults.DIVISIBILITY_TOL:
                raise ValueError(f"dt={dt!r} does not divide final_time={self.final_time!r}")

    @property
    def sobolev_orders(self) -> Tuple[int, int, int]:
        return indices_for(self.r, self.preset.symbol.degree).as_tuple()

    def resolved_ref_dt(self) -> float:
        return self.ref_dt or default_ref_dt(self.final_time, self.dt_list[-1])


@dataclass(frozen=True)
class StudyContext:
    """Everything shared by the rows of a study (and by both schemes of a comparison)."""

    u0: Field
    reference: Field
    metadata: ReferenceMetadata
    allow_growth: bool


@dataclass(frozen=True)
class SchemeComparison:
    lie: ConvergenceTable
    strang: ConvergenceTable

    @property
    def order_gap(self) -> float:
        return self.strang.fitted_order_hr - self.lie.fitted_order_hr


# =============================================================================
# 🔧 Study pieces
# =============================================================================
def prepare_study(spec: StudySpec) -> StudyContext:
    """
    Validate the symbol, build u0 and the self-verified reference.

    Raises:
        DissipativityError: Strict violation
        ReferenceInvalidError: Reference self-convergence failure
    """
    report = validate_dissipativity(spec.preset.symbol, spec.grid, strict=spec.strict)
    allow_growth = not report.passed
    u0 = spec.initial_condition.build(spec.grid)

    ref_dt = spec.resolved_ref_dt()
    limit = spec.dt_list[-1] / NumericsDefaults.REFERENCE_DT_FACTOR
    if ref_dt > limit * (1 + 1e-12):
        custom_logger.warning(
            "⚠️ ref_dt %.3e is above min(dt)/%d = %.3e",
            ref_dt,
            NumericsDefaults.REFERENCE_DT_FACTOR,
            limit,
        )
    reference, metadata = verified_reference(
        u0, spec.final_time, spec.preset.symbol, ref_dt, spec.r, allow_growth=allow_growth
    )
    return StudyContext(u0, reference, metadata, allow_growth)


def _failed_row(dt: float, error: GuardViolationError) -> ConvergenceRow:
    return ConvergenceRow(
        dt=dt,
        err_hr=math.nan,
        err_hq=math.nan,
        err_l2=math.nan,
        wallclock_s=0.0,
        admissible=False,
        flag=f"guard violation at step {error.step_index}",
    )


def run_row(spec: StudySpec, context: StudyContext, dt: float) -> ConvergenceRow:
    """Evolve at one Δt and measure the final-time error against the reference."""
    r, q, _ = spec.sobolev_orders
    plan = StepPlan.covering(
        spec.scheme,
        dt,
        spec.final_time,
        spec.sobolev_orders,
        burgers_options=spec.burgers_options,
        allow_growth=context.allow_growth,
    )
    started = time.perf_counter()
    try:
        trajectory = evolve(context.u0, plan, spec.preset.symbol)
    except GuardViolationError as e:
        custom_logger.warning("⚠️ Row dt=%.6g excluded: %s", dt, e)
        return _failed_row(dt, e)
    elapsed = time.perf_counter() - started

    diff = trajectory.final - context.reference
    traces = {monitor.value: list(values) for monitor, values in trajectory.norm_traces.items()}
    row = ConvergenceRow(
        dt=dt,
        err_hr=sobolev_norm(diff, r),
        err_hq=sobolev_norm(diff, q),
        err_l2=l2_norm(diff),
        wallclock_s=elapsed if spec.record_wallclock else 0.0,
        max_norm_hp=max(trajectory.norm_traces.get(Monitor.NORM_HP, [math.nan])),
        norm_traces=traces,
    )
    custom_logger.info(
        "📈 %s dt=%.6g: err_Hr=%.3e err_Hq=%.3e", spec.scheme.value, dt, row.err_hr, row.err_hq
    )
    return row


def tabulate(
    rows: Sequence[ConvergenceRow], reference: Optional[ReferenceMetadata]
) -> ConvergenceTable:
    """Mark admissible rows, fit both orders, and flag under-resolved studies."""
    ordered = sorted(rows, key=lambda row: row.dt, reverse=True)
    delta = reference.self_convergence_delta if reference else 0.0
    mask = admissible_mask([row.err_hr for row in ordered], delta)
    for row, keep in zip(ordered, mask):
        if not keep and row.admissible:
            row.admissible = False
            row.flag = row.flag or "below reference floor"

    under_resolved = is_under_resolved([row.admissible for row in ordered])
    kept = [row for row in ordered if row.admissible]
    table = ConvergenceTable(
        rows=list(ordered),
        fitted_order_hr=math.nan,
        fitted_order_hq=math.nan,
        residual_hr=math.nan,
        residual_hq=math.nan,
        reference=reference,
        under_resolved=under_resolved,
    )
    if len(kept) >= NumericsDefaults.MIN_FIT_POINTS:
        dts = [row.dt for row in kept]
        fit_hr = fit_order(dts, [row.err_hr for row in kept])
        fit_hq = fit_order(dts, [row.err_hq for row in kept])
        table.fitted_order_hr, table.residual_hr = fit_hr.slope, fit_hr.residual
        table.fitted_order_hq, table.residual_hq = fit_hq.slope, fit_hq.residual
        table.pairwise_orders_hr = pairwise_orders(dts, [row.err_hr for row in kept])
        table.pairwise_orders_hq = pairwise_orders(dts, [row.err_hq for row in kept])

    if under_resolved:
        custom_logger.warning(
            "⚠️ Study under-resolved: %d of %d rows admissible", len(kept), len(ordered)
        )
    return table


# =============================================================================
# 🚀 Public API
# =============================================================================
def run_convergence(
    spec: StudySpec,
    context: Optional[StudyContext] = None,
    threads: Optional[int] = None,
) -> ConvergenceTable:
    """
    Run every row of the study and fit orders over admissible rows.

    Raises:
        DissipativityError: Strict violation of the symbol condition
        ReferenceInvalidError: Reference self-convergence failure
    """
    context = context or prepare_study(spec)
    workers = threads or RuntimeConfig.threads()
    custom_logger.info(
        "📊 %s study on %s: %d rows, %d worker(s)",
        spec.scheme.value,
        spec.preset.label,
        len(spec.dt_list),
        workers,
    )
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows: List[ConvergenceRow] = list(
            pool.map(lambda dt: run_row(spec, context, dt), spec.dt_list)
        )
    table = tabulate(rows, context.metadata)
    custom_logger.info(
        "✅ Fitted orders: H^r %.3f, H^q %.3f", table.fitted_order_hr, table.fitted_order_hq
    )
    return table


def compare_schemes(spec: StudySpec, threads: Optional[int] = None) -> SchemeComparison:
    """Lie and Strang on the same study, sharing one reference."""
    context = prepare_study(spec)
    lie = run_convergence(replace(spec, scheme=SchemeKind.LIE), context, threads)
    strang = run_convergence(replace(spec, scheme=SchemeKind.STRANG), context, threads)
    comparison = SchemeComparison(lie, strang)
    custom_logger.info("📊 Strang - Lie H^r order gap: %.3f", comparison.order_gap)
    return comparison


def errors_monotone(table: ConvergenceTable) -> bool:
    """True when admissible H^r errors decrease with Δt."""
    errors = np.array([row.err_hr for row in table.admissible_rows])
    return bool(np.all(np.diff(errors) < 0))
