from __future__ import annotations

from pathlib import Path
from typing import Optional, Tuple

import pandas as pd
from openpyxl import load_workbook
from openpyxl.utils import get_column_letter
from openpyxl.worksheet.worksheet import Worksheet

from helpers import file_helper
from splitting_core import ConvergenceTable, ExcelStyling, custom_logger

from .reports import rows_frame

# Expected order window per norm, used for the pass/fail fill
OrderWindow = Tuple[float, float]


# =============================================================================
# 🧱 Basic Styling Utilities
# =============================================================================
def _auto_adjust_columns(ws: Worksheet) -> None:
    """Auto-adjust column widths based on header and cell values, with a max width limit."""
    for col in ws.columns:
        max_width = max(len(str(cell.value if cell.value is not None else "")) for cell in col)
        col_letter = get_column_letter(col[0].column)
        ws.column_dimensions[col_letter].width = min(
            max_width + 2, ExcelStyling.MAX_COLUMN_WIDTH
        )


def _style_header(ws: Worksheet) -> None:
    """Apply bold + center alignment to header row."""
    for cell in ws[ExcelStyling.HEADER_ROW_INDEX]:
        cell.font = ExcelStyling.BOLD_FONT
        cell.alignment = ExcelStyling.CENTER_ALIGNMENT


def _style_rows_sheet(ws: Worksheet, table: ConvergenceTable) -> None:
    """Scientific number format; inadmissible rows greyed out."""
    custom_logger.debug("Styling %s sheet", ws.title)
    for row_cells, row in zip(ws.iter_rows(min_row=2), table.rows):
        for cell in row_cells:
            cell.number_format = ExcelStyling.SCIENTIFIC_FORMAT
            cell.alignment = ExcelStyling.RIGHT_ALIGNMENT
            if not row.admissible:
                cell.fill = ExcelStyling.GREY_FILL


def _style_summary_sheet(ws: Worksheet) -> None:
    """Verdict column filled green for PASS and red for FAIL."""
    for row in ws.iter_rows(min_row=2):
        row[0].alignment = ExcelStyling.LEFT_ALIGNMENT
        verdict = row[-1]
        if verdict.value in ("PASS", "FAIL"):
            verdict.font = ExcelStyling.BOLD_FONT
            verdict.fill = ExcelStyling.GREEN_FILL if verdict.value == "PASS" else ExcelStyling.RED_FILL


# =============================================================================
# 📊 Summary
# =============================================================================
def _verdict(order: float, window: Optional[OrderWindow]) -> str:
    if window is None:
        return ""
    low, high = window
    return "PASS" if low <= order <= high else "FAIL"


def summary_frame(
    table: ConvergenceTable,
    window_hr: Optional[OrderWindow] = None,
    window_hq: Optional[OrderWindow] = None,
) -> pd.DataFrame:
    records = [
        {
            "Norm": "H^r",
            "Fitted order": table.fitted_order_hr,
            "Fit residual": table.residual_hr,
            "Verdict": _verdict(table.fitted_order_hr, window_hr),
        },
        {
            "Norm": "H^q",
            "Fitted order": table.fitted_order_hq,
            "Fit residual": table.residual_hq,
            "Verdict": _verdict(table.fitted_order_hq, window_hq),
        },
    ]
    return pd.DataFrame(records)


# =============================================================================
# 💾 Workbook
# =============================================================================
def write_convergence_workbook(
    table: ConvergenceTable,
    output: Path,
    window_hr: Optional[OrderWindow] = None,
    window_hq: Optional[OrderWindow] = None,
) -> Path:
    """Summary and per-row sheets, then styling in place."""
    custom_logger.info("📁 Writing Excel report to: %s", output)
    file_helper.ensure_dir(output.parent)
    with pd.ExcelWriter(output, engine="openpyxl") as writer:
        summary_frame(table, window_hr, window_hq).to_excel(
            writer, sheet_name=ExcelStyling.SUMMARY_SHEET, index=False
        )
        rows_frame(table).to_excel(writer, sheet_name=ExcelStyling.ROWS_SHEET, index=False)

    wb = load_workbook(output)
    for ws in wb.worksheets:
        _auto_adjust_columns(ws)
        _style_header(ws)
    _style_summary_sheet(wb[ExcelStyling.SUMMARY_SHEET])
    _style_rows_sheet(wb[ExcelStyling.ROWS_SHEET], table)
    wb.save(output)
    custom_logger.info("✅ Workbook saved successfully: %s", output)
    return output
