from .file_generation import (CONVERGENCE_HEADER, assert_convergence_csv,
                              assert_file_exists, assert_study_artifacts,
                              assert_two_column_file, assert_valid_excel)
from .numerics import assert_fields_close, assert_relative_close

__all__ = [
    "CONVERGENCE_HEADER",
    "assert_file_exists",
    "assert_valid_excel",
    "assert_convergence_csv",
    "assert_two_column_file",
    "assert_study_artifacts",
    "assert_fields_close",
    "assert_relative_close",
]
