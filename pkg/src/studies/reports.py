"""
Artifact writers: convergence CSV, JSON report, two-column plot data, norm traces
and final field. Float formatting is fixed ("%.17g") so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Mapping

import pandas as pd

from fourier import Field
from helpers import file_helper
from splitting_core import (ConvergenceColumn, ConvergenceTable, GrowthReport,
                            Monitor, Trajectory, custom_logger)

FLOAT_FORMAT = "%.17g"
NORM_TRACE_COLUMNS = ["t"] + [monitor.value for monitor in Monitor]
LOGLOG_FILES = {
    "hr": ConvergenceColumn.ERR_HR,
    "hq": ConvergenceColumn.ERR_HQ,
    "l2": ConvergenceColumn.ERR_L2,
}


# =============================================================================
# 🧮 Frames & dicts
# =============================================================================
def rows_frame(table: ConvergenceTable) -> pd.DataFrame:
    """One row per Δt with the stable header dt,err_hr,err_hq,err_l2,wallclock_s."""
    columns = [column.value for column in ConvergenceColumn]
    records = [{column: getattr(row, column) for column in columns} for row in table.rows]
    return pd.DataFrame(records, columns=columns)


def _json_safe(value: Any) -> Any:
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, Mapping):
        return {str(key): _json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    if hasattr(value, "item"):  # numpy scalars
        return _json_safe(value.item())
    return value


def table_to_dict(table: ConvergenceTable) -> Dict[str, Any]:
    return {
        "fitted_order_hr": table.fitted_order_hr,
        "fitted_order_hq": table.fitted_order_hq,
        "residual_hr": table.residual_hr,
        "residual_hq": table.residual_hq,
        "pairwise_orders_hr": table.pairwise_orders_hr,
        "pairwise_orders_hq": table.pairwise_orders_hq,
        "under_resolved": table.under_resolved,
        "reference": asdict(table.reference) if table.reference else None,
        "rows": [asdict(row) for row in table.rows],
    }


def growth_to_dict(report: GrowthReport) -> Dict[str, Any]:
    return {
        "c_fit": report.c_fit,
        "stability_factor": report.stability_factor,
        "slack": report.slack,
        "calibration_index": report.calibration_index,
        "all_bounded": report.all_bounded,
        "runs": [asdict(run) for run in report.runs],
    }


# =============================================================================
# 💾 Writers
# =============================================================================
def write_convergence_csv(table: ConvergenceTable, path: Path) -> Path:
    file_helper.ensure_dir(path.parent)
    rows_frame(table).to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    custom_logger.info("✅ Convergence CSV written: %s", path)
    return path


def write_loglog_files(table: ConvergenceTable, directory: Path) -> List[Path]:
    """loglog_hr.dat, loglog_hq.dat, loglog_l2.dat with columns `dt error`."""
    frame = rows_frame(table)
    paths = []
    for suffix, column in LOGLOG_FILES.items():
        path = directory / f"loglog_{suffix}.dat"
        file_helper.ensure_dir(directory)
        frame[[ConvergenceColumn.DT.value, column.value]].to_csv(
            path,
            sep=" ",
            header=False,
            index=False,
            float_format=FLOAT_FORMAT,
            na_rep="nan",
            lineterminator="\n",
        )
        paths.append(path)
    custom_logger.info("✅ Log-log data written to %s", directory)
    return paths


def write_json_report(payload: Mapping[str, Any], path: Path) -> Path:
    text = json.dumps(_json_safe(payload), sort_keys=True, indent=2, allow_nan=False)
    return file_helper.safe_write(path, text + "\n")


def write_norm_traces(trajectory: Trajectory, path: Path) -> Path:
    """t plus every recorded monitor; unrecorded monitors are left out."""
    data: Dict[str, List[float]] = {"t": list(trajectory.times)}
    for monitor in Monitor:
        if monitor in trajectory.norm_traces:
            data[monitor.value] = list(trajectory.norm_traces[monitor])
    file_helper.ensure_dir(path.parent)
    pd.DataFrame(data).to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    custom_logger.info("✅ Norm traces written: %s", path)
    return path


def write_final_field(field: Field, path: Path) -> Path:
    """Two columns `x u`."""
    file_helper.ensure_dir(path.parent)
    frame = pd.DataFrame({"x": field.grid.nodes, "u": field.samples})
    frame.to_csv(
        path, sep=" ", header=False, index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
    )
    custom_logger.info("✅ Final field written: %s", path)
    return path
