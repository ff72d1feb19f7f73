"""
Subcommand handlers. Each takes a validated RunConfig, writes its artifacts under
`output.directory`, and returns an ExitCode; `dispatch` maps errors to exit codes.

Exit codes: 0 success, 1 configuration error, 2 validation or identity failure,
3 runtime guard violation.
"""

from __future__ import annotations

import math
import time
from pathlib import Path
from typing import Any, Callable, Dict, List, Sequence

import numpy as np
import pandas as pd

from dispersion import (DispersionSymbol, make_preset, symbol_values,
                        validate_dissipativity)
from fourier import Field, linf_norm, relative_linf_error, sobolev_norm
from helpers import file_helper
from schemes import evolve
from splitting_core import (BlowUpError, ConfigurationError, ConvergenceTable,
                            DimensionError, DissipativityError, ExitCode,
                            GuardViolationError, NonConvergenceError,
                            NumericsDefaults, OutputFormat, PresetName,
                            ReferenceInvalidError, SchemeKind, StepPlan,
                            StepTooLargeError, custom_logger)
from studies import (StudySpec, compare_schemes, growth_check, growth_to_dict,
                     local_error_study, random_bandlimited, run_convergence,
                     sine, table_to_dict, write_convergence_csv,
                     write_convergence_workbook, write_final_field,
                     write_json_report, write_loglog_files, write_norm_traces)
from studies.reports import FLOAT_FORMAT
from subflows import (commutator_AB, commutator_terms, double_commutator,
                      double_commutator_terms, highest_order, nested_bracket,
                      shock_time)

from .config import CommutatorBlock, GrowthBlock, RunConfig, load_config

Command = Callable[[RunConfig], ExitCode]

# Expected H^r order window per scheme and the H^q lower bound, for the workbook verdicts
ORDER_WINDOWS = {SchemeKind.LIE: (0.8, 1.2), SchemeKind.STRANG: (1.8, 2.2)}
HQ_ORDER_WINDOW = (0.8, math.inf)
MIN_ORDER_GAP = 0.7


# =============================================================================
# 🔧 Shared helpers
# =============================================================================
def _initial_field(config: RunConfig) -> Field:
    return config.initial_condition_spec().build(config.build_grid())


def build_study(config: RunConfig) -> StudySpec:
    """StudySpec from the config; invariant violations become ConfigurationError."""
    try:
        return StudySpec(
            preset=config.build_preset(),
            grid=config.build_grid(),
            initial_condition=config.initial_condition_spec(),
            r=config.scheme.r,
            final_time=config.scheme.final_time,
            dt_list=tuple(config.scheme.step_sizes()),
            scheme=config.scheme.kind,
            ref_dt=config.scheme.ref_dt,
            burgers_options=config.burgers.options(),
            strict=config.equation.strict,
            record_wallclock=config.output.record_wallclock,
        )
    except ValueError as e:
        if isinstance(e, ConfigurationError):
            raise
        raise ConfigurationError(str(e), "scheme") from e


def _write_table_artifacts(
    config: RunConfig, table: ConvergenceTable, stem: str
) -> None:
    directory = config.output_dir()
    if config.wants(OutputFormat.CSV):
        write_convergence_csv(table, directory / f"{stem}.csv")
    if config.wants(OutputFormat.DAT):
        write_loglog_files(table, directory)
    if config.wants(OutputFormat.JSON):
        payload = {"config": config.echo(), "table": table_to_dict(table)}
        write_json_report(payload, directory / f"{stem}.json")
    if config.wants(OutputFormat.XLSX):
        write_convergence_workbook(
            table,
            directory / f"{stem}.xlsx",
            window_hr=ORDER_WINDOWS[config.scheme.kind],
            window_hq=HQ_ORDER_WINDOW,
        )


def _echo_orders(table: ConvergenceTable) -> None:
    custom_logger.info("fitted_order_hr=%r fitted_order_hq=%r", table.fitted_order_hr, table.fitted_order_hq)
    custom_logger.info("residual_hr=%r residual_hq=%r", table.residual_hr, table.residual_hq)


# =============================================================================
# ✅ validate
# =============================================================================
def cmd_validate(config: RunConfig) -> ExitCode:
    """Symbol extremes, dissipativity verdict, shock time of u0 and (r, q, p)."""
    grid = config.build_grid()
    preset = config.build_preset()
    values = symbol_values(preset.symbol, grid)
    modes = grid.modes

    custom_logger.info("📚 Equation %s: P(X) = %s", preset.label, preset.symbol.describe())
    for label, index in (
        ("max Re P(ik)", int(np.argmax(values.real))),
        ("min Re P(ik)", int(np.argmin(values.real))),
        ("max Im P(ik)", int(np.argmax(values.imag))),
        ("min Im P(ik)", int(np.argmin(values.imag))),
    ):
        custom_logger.info(
            "   %-13s mode %5d: %+.6e %+.6ei", label, modes[index], values[index].real, values[index].imag
        )

    report = validate_dissipativity(preset.symbol, grid, strict=config.equation.strict)
    verdict = "PASS" if report.passed else "WARN"
    u0 = _initial_field(config)
    horizon = shock_time(u0)
    r, q, p = config.indices().as_tuple()

    custom_logger.info("Dissipativity: %s (max Re P = %.3e)", verdict, report.max_real_part)
    custom_logger.info("shock_time(u0) = %.6g", horizon)
    custom_logger.info("Sobolev indices: r=%d q=%d p=%d", r, q, p)

    if config.wants(OutputFormat.JSON):
        write_json_report(
            {
                "preset": preset.label,
                "verdict": verdict,
                "max_real_part": report.max_real_part,
                "violating_modes": list(report.violating_modes),
                "shock_time": horizon,
                "indices": {"r": r, "q": q, "p": p},
            },
            config.output_dir() / "validate.json",
        )
    return ExitCode.SUCCESS


# =============================================================================
# ▶️ run
# =============================================================================
def cmd_run(config: RunConfig) -> ExitCode:
    """Evolve once at the smallest configured Δt; write norm traces and the final field."""
    preset = config.build_preset()
    grid = config.build_grid()
    report = validate_dissipativity(preset.symbol, grid, strict=config.equation.strict)
    dt = config.scheme.step_sizes()[-1]
    try:
        plan = StepPlan.covering(
            config.scheme.kind,
            dt,
            config.scheme.final_time,
            config.indices().as_tuple(),
            burgers_options=config.burgers.options(),
            allow_growth=not report.passed,
        )
    except ValueError as e:
        raise ConfigurationError(str(e), "scheme.dt") from e

    u0 = _initial_field(config)
    started = time.perf_counter()
    trajectory = evolve(u0, plan, preset.symbol)
    elapsed = time.perf_counter() - started

    directory = config.output_dir()
    write_norm_traces(trajectory, directory / "norm_traces.csv")
    write_final_field(trajectory.final, directory / "final_field.dat")

    r, q, p = plan.sobolev_orders
    final = trajectory.final
    custom_logger.info(
        "✅ %s run: %d steps of dt=%.6g, |u|_H%d=%.6e |u|_H%d=%.6e |u|_H%d=%.6e, %.2fs",
        plan.scheme.value,
        trajectory.steps_taken,
        dt,
        r,
        sobolev_norm(final, r),
        q,
        sobolev_norm(final, q),
        p,
        sobolev_norm(final, p),
        elapsed,
    )
    return ExitCode.SUCCESS


# =============================================================================
# 📈 converge / local-error / compare
# =============================================================================
def cmd_converge(config: RunConfig) -> ExitCode:
    spec = build_study(config)
    table = run_convergence(spec)
    _write_table_artifacts(config, table, "convergence")
    _echo_orders(table)
    if table.under_resolved:
        custom_logger.error("❌ Study under-resolved; fitted orders are not trustworthy")
        return ExitCode.VALIDATION_FAILURE
    return ExitCode.SUCCESS


def cmd_local_error(config: RunConfig) -> ExitCode:
    preset = config.build_preset()
    grid = config.build_grid()
    report = validate_dissipativity(preset.symbol, grid, strict=config.equation.strict)
    table = local_error_study(
        _initial_field(config),
        config.scheme.step_sizes(),
        preset.symbol,
        config.scheme.r,
        scheme=config.scheme.kind,
        opts=config.burgers.options(),
        allow_growth=not report.passed,
    )
    _write_table_artifacts(config, table, "local_error")
    _echo_orders(table)
    if table.under_resolved:
        custom_logger.error("❌ Local error study under-resolved")
        return ExitCode.VALIDATION_FAILURE
    return ExitCode.SUCCESS


def cmd_compare(config: RunConfig) -> ExitCode:
    """Lie and Strang on the same study; Strang must gain at least 0.7 in H^r order."""
    comparison = compare_schemes(build_study(config))
    directory = config.output_dir()
    for name, table in (("lie", comparison.lie), ("strang", comparison.strang)):
        if config.wants(OutputFormat.CSV):
            write_convergence_csv(table, directory / f"convergence_{name}.csv")
    if config.wants(OutputFormat.JSON):
        write_json_report(
            {
                "config": config.echo(),
                "lie": table_to_dict(comparison.lie),
                "strang": table_to_dict(comparison.strang),
                "order_gap": comparison.order_gap,
            },
            directory / "compare.json",
        )
    custom_logger.info("order_gap=%r", comparison.order_gap)
    if not comparison.order_gap >= MIN_ORDER_GAP:
        custom_logger.error("❌ Order gap %.3f below %.1f", comparison.order_gap, MIN_ORDER_GAP)
        return ExitCode.VALIDATION_FAILURE
    return ExitCode.SUCCESS


# =============================================================================
# 🧮 commutator-check
# =============================================================================
def _commutator_fields(config: RunConfig, block: CommutatorBlock) -> List[Field]:
    grid = config.build_grid()
    max_mode = block.max_mode or min(grid.n_points // 6, 16)
    return [random_bandlimited(grid, max_mode, 1.0, seed) for seed in range(block.seeds)]


def _constant_residual(constant: Field, symbol: DispersionSymbol) -> float:
    """Largest |.|_inf of either route on a constant field; every bracket vanishes there."""
    ab = commutator_AB(constant, symbol, verify=True)
    double = double_commutator(constant, symbol, verify=True)
    return max(linf_norm(f) for f in (ab.direct, ab.leibniz, double.direct, double.leibniz))


def commutator_suite(config: RunConfig) -> List[Dict[str, Any]]:
    """Worst route disagreement per preset for [A,B], [A,[A,B]] and the sign oracle."""
    block = config.commutator or CommutatorBlock()
    fields = _commutator_fields(config, block)
    constant = Field.constant(config.build_grid(), 0.7)
    results = []
    for name in block.presets:
        preset = make_preset(name, block.beta if name is PresetName.BENNEY_LIN else 0.0)
        worst_ab = worst_double = worst_sign = 0.0
        for v in fields:
            worst_ab = max(worst_ab, commutator_AB(v, preset.symbol, verify=True).relative_error)
            routes = double_commutator(v, preset.symbol, verify=True)
            worst_double = max(worst_double, routes.relative_error)
            oracle = nested_bracket(v, preset.symbol)
            worst_sign = max(worst_sign, relative_linf_error(routes.direct, oracle))
        results.append(
            {
                "preset": preset.label,
                "worst_ab": worst_ab,
                "worst_double": worst_double,
                "worst_sign": worst_sign,
                "constant_residual": _constant_residual(constant, preset.symbol),
                "top_order_ab": highest_order(commutator_terms(preset.symbol)),
                "top_order_double": highest_order(double_commutator_terms(preset.symbol)),
                "ell": preset.symbol.degree,
            }
        )
    return results


def cmd_commutator_check(config: RunConfig) -> ExitCode:
    threshold = NumericsDefaults.COMMUTATOR_THRESHOLD
    results = commutator_suite(config)
    failed = False
    for item in results:
        passed = (
            max(item["worst_ab"], item["worst_double"], item["worst_sign"]) <= threshold
            and item["constant_residual"] <= threshold
            and item["top_order_ab"] <= item["ell"]
            and item["top_order_double"] <= 2 * item["ell"] - 1
        )
        item["verdict"] = "PASS" if passed else "FAIL"
        failed = failed or not passed
        log = custom_logger.info if passed else custom_logger.error
        log(
            "%s %-18s [A,B] %.2e  [A,[A,B]] %.2e  sign %.2e",
            "✅" if passed else "❌",
            item["preset"],
            item["worst_ab"],
            item["worst_double"],
            item["worst_sign"],
        )

    directory = config.output_dir()
    if config.wants(OutputFormat.CSV):
        path = directory / "commutator_check.csv"
        file_helper.ensure_dir(directory)
        pd.DataFrame(results).to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    if config.wants(OutputFormat.JSON):
        write_json_report(
            {"threshold": threshold, "results": results}, directory / "commutator_check.json"
        )
    return ExitCode.VALIDATION_FAILURE if failed else ExitCode.SUCCESS


# =============================================================================
# 🌱 growth
# =============================================================================
def cmd_growth(config: RunConfig) -> ExitCode:
    block = config.growth or GrowthBlock()
    grid = config.build_grid()
    family = [sine(grid, amplitude, 1) for amplitude in block.amplitudes]
    report = growth_check(
        family,
        block.dt,
        block.final_time,
        config.indices(),
        config.burgers.options(),
        amplitudes=block.amplitudes,
    )
    if config.wants(OutputFormat.JSON):
        write_json_report(growth_to_dict(report), config.output_dir() / "growth.json")
    ok = report.all_bounded and report.stability_factor <= NumericsDefaults.GROWTH_STABILITY_FACTOR
    custom_logger.info("c_fit=%r stability_factor=%r", report.c_fit, report.stability_factor)
    return ExitCode.SUCCESS if ok else ExitCode.VALIDATION_FAILURE


# =============================================================================
# 🚦 Dispatch
# =============================================================================
COMMANDS: Dict[str, Command] = {
    "validate": cmd_validate,
    "run": cmd_run,
    "converge": cmd_converge,
    "local-error": cmd_local_error,
    "commutator-check": cmd_commutator_check,
    "compare": cmd_compare,
    "growth": cmd_growth,
}


def dispatch(command: str, config_path: Path, overrides: Sequence[str] = ()) -> int:
    """Load the config, run one subcommand, and translate errors to exit codes."""
    try:
        config = load_config(config_path, overrides)
        return int(COMMANDS[command](config))
    except (ConfigurationError, DimensionError) as e:
        custom_logger.error("❌ Configuration error: %s", e)
        return int(ExitCode.CONFIG_ERROR)
    except (DissipativityError, ReferenceInvalidError) as e:
        custom_logger.error("❌ Validation failed: %s", e)
        return int(ExitCode.VALIDATION_FAILURE)
    except GuardViolationError as e:
        custom_logger.error(
            "🔥 Guard violation at step %d (shock_time=%.6g, |u|_Hq=%.6g)",
            e.step_index,
            e.shock_time,
            e.norm_hq,
        )
        return int(ExitCode.GUARD_VIOLATION)
    except (StepTooLargeError, BlowUpError, NonConvergenceError) as e:
        custom_logger.error("🔥 Runtime guard: %s", e)
        return int(ExitCode.GUARD_VIOLATION)
    except Exception as exc:
        custom_logger.exception("🔥 Command %s failed: %s", command, exc)
        return int(ExitCode.CONFIG_ERROR)
