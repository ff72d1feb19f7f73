# splitting_core/__init__.py
"""
Exposes shared configuration, logging, enums, data classes and errors.
"""

# === Environment & numeric defaults ===
from .constants import (ExcelStyling, NumericsDefaults, PathsConfig,
                        RuntimeConfig, get_env_var)
# === Logger ===
from .custom_logger import custom_logger
# === Enums ===
from .enums import (BurgersMethod, ConvergenceColumn, ExitCode, FolderType,
                    Monitor, OutputFormat, PresetName, SchemeKind)
# === Errors ===
from .exceptions import (BlowUpError, ConfigurationError, DimensionError,
                         DissipativityError, GuardViolationError,
                         InsufficientDataError, NonConvergenceError,
                         ReferenceInvalidError, SplittingError,
                         StepTooLargeError)
# === Data classes ===
from .models import (BurgersSolveOptions, ConvergenceRow, ConvergenceTable,
                     GrowthReport, GrowthRun, ReferenceMetadata, StepPlan,
                     Trajectory)

__all__ = [
    "PathsConfig",
    "RuntimeConfig",
    "NumericsDefaults",
    "ExcelStyling",
    "get_env_var",
    "custom_logger",
    "BurgersMethod",
    "ConvergenceColumn",
    "ExitCode",
    "FolderType",
    "Monitor",
    "OutputFormat",
    "PresetName",
    "SchemeKind",
    "SplittingError",
    "DimensionError",
    "ConfigurationError",
    "DissipativityError",
    "StepTooLargeError",
    "NonConvergenceError",
    "BlowUpError",
    "GuardViolationError",
    "ReferenceInvalidError",
    "InsufficientDataError",
    "BurgersSolveOptions",
    "StepPlan",
    "Trajectory",
    "ConvergenceRow",
    "ConvergenceTable",
    "ReferenceMetadata",
    "GrowthRun",
    "GrowthReport",
]
