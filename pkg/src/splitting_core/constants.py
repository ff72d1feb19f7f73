# --------------------------------------------------------------------
# 🧰 Environment & Config
# --------------------------------------------------------------------
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv
from openpyxl.styles import Alignment, Font, PatternFill

from .enums import FolderType

load_dotenv()  # Load environment variables from .env file


# -------------------------
# Fail-fast helper for env vars
# -------------------------
def get_env_var(name: str, default: str | None = None, required: bool = False) -> str:
    """
    Fetch an environment variable.
    Fail fast if required variable is missing or if no default is provided.
    """
    if name in os.environ:
        return os.environ[name]
    if required:
        raise EnvironmentError(f"Missing required environment variable: {name}")
    if default is not None:
        return default
    raise EnvironmentError(f"No value found for {name} and no default provided")


def _default_threads() -> int:
    return max(1, min(4, os.cpu_count() or 1))


# --------------------------------------------------------------------
# 📁 Paths Configuration
# --------------------------------------------------------------------
@dataclass(frozen=True)
class PathsConfig:
    """
    Centralized configuration for output folders.
    """

    OUTPUT_DIR: Path = Path(
        get_env_var("SPLITTING_OUTPUT_DIR", FolderType.OUTPUTS.value)
    )
    REPORTS_DIR: Path = Path(
        get_env_var("SPLITTING_REPORTS_DIR", FolderType.REPORTS.value)
    )
    CONFIGS_DIR: Path = Path(get_env_var("SPLITTING_CONFIGS_DIR", "configs"))


# --------------------------------------------------------------------
# ⚙️ Runtime Configuration
# --------------------------------------------------------------------
@dataclass(frozen=True)
class RuntimeConfig:
    """
    Process-level knobs, read at call time so tests and runs can override them.
    """

    THREADS_ENV: str = "SPLITTING_THREADS"
    LOG_LEVEL_ENV: str = "SPLITTING_LOG_LEVEL"

    @classmethod
    def log_level(cls) -> int:
        """Numeric logging level; unknown names fall back to INFO."""
        level = logging.getLevelName(get_env_var(cls.LOG_LEVEL_ENV, "INFO").upper())
        return level if isinstance(level, int) else logging.INFO

    @classmethod
    def threads(cls) -> int:
        """Worker count for row-level concurrency, read at call time."""
        raw = get_env_var(cls.THREADS_ENV, str(_default_threads()))
        try:
            value = int(raw)
        except ValueError as e:
            raise EnvironmentError(
                f"{cls.THREADS_ENV} must be an integer, got {raw!r}"
            ) from e
        if value < 1:
            raise EnvironmentError(f"{cls.THREADS_ENV} must be >= 1, got {value}")
        return value


# --------------------------------------------------------------------
# 🔢 Numerical Defaults
# --------------------------------------------------------------------
@dataclass(frozen=True)
class NumericsDefaults:
    # === Spectral ===
    MIN_POINTS: int = 8
    DEALIAS_FRACTION: float = 1.0 / 3.0  # |m| > N/3 is zeroed

    # === Dispersion symbol ===
    DISSIPATIVITY_RTOL: float = 1e-12

    # === Burgers subflow ===
    BURGERS_TOLERANCE: float = 1e-12
    BURGERS_MAX_ITERATIONS: int = 100
    SAFETY_FRACTION: float = 0.5
    RK_STABILITY_NUMBER: float = 1.0  # h * max|u| * k_max for explicit RK4

    # === Reference integrator ===
    REFERENCE_DT_FACTOR: int = 20  # ref_dt <= min(dt) / 20
    REFERENCE_SELF_CONVERGENCE: float = 1e-10

    # === Harness ===
    ADMISSIBILITY_FACTOR: float = 100.0
    MIN_FIT_POINTS: int = 3
    MAX_DROPPED_ROWS: int = 2
    SNAPSHOT_BUDGET: int = 200
    COMMUTATOR_THRESHOLD: float = 1e-8
    GROWTH_SLACK: float = 1.1
    GROWTH_STABILITY_FACTOR: float = 2.0
    DIVISIBILITY_TOL: float = 1e-12


# --------------------------------------------------------------------
# 🎨 Excel Report Styling
# --------------------------------------------------------------------
class ExcelStyling:
    # === General constants ===
    MAX_COLUMN_WIDTH: int = 40
    HEADER_ROW_INDEX: int = 1
    SUMMARY_SHEET: str = "Summary"
    ROWS_SHEET: str = "Convergence"

    # === Fonts & Alignment ===
    BOLD_FONT: Font = Font(bold=True)
    LEFT_ALIGNMENT: Alignment = Alignment(horizontal="left", vertical="center")
    CENTER_ALIGNMENT: Alignment = Alignment(horizontal="center", vertical="center")
    RIGHT_ALIGNMENT: Alignment = Alignment(horizontal="right", vertical="center")

    # === Cell fills ===
    GREEN_FILL: PatternFill = PatternFill(start_color="C6EFCE", fill_type="solid")
    RED_FILL: PatternFill = PatternFill(start_color="FFC7CE", fill_type="solid")
    GREY_FILL: PatternFill = PatternFill(start_color="D9D9D9", fill_type="solid")

    # === Number format for error columns ===
    SCIENTIFIC_FORMAT: str = "0.000E+00"
