from .analytic import (residual_expression, soliton_expression,
                       soliton_profile, soliton_residual)
from .convergence import (SchemeComparison, StudyContext, StudySpec,
                          compare_schemes, errors_monotone, prepare_study,
                          run_convergence, run_row, tabulate)
from .excel_report import summary_frame, write_convergence_workbook
from .fitting import (OrderFit, admissible_mask, fit_order, is_under_resolved,
                      pairwise_orders)
from .growth import growth_check
from .initial_conditions import (FAMILIES, InitialConditionSpec, gaussian,
                                 random_bandlimited, sine, soliton)
from .local_error import local_error_study
from .reports import (growth_to_dict, rows_frame, table_to_dict,
                      write_convergence_csv, write_final_field,
                      write_json_report, write_loglog_files, write_norm_traces)

__all__ = [
    "StudySpec",
    "StudyContext",
    "SchemeComparison",
    "prepare_study",
    "run_row",
    "tabulate",
    "run_convergence",
    "compare_schemes",
    "errors_monotone",
    "local_error_study",
    "growth_check",
    "OrderFit",
    "fit_order",
    "pairwise_orders",
    "admissible_mask",
    "is_under_resolved",
    "InitialConditionSpec",
    "FAMILIES",
    "sine",
    "gaussian",
    "soliton",
    "random_bandlimited",
    "soliton_expression",
    "residual_expression",
    "soliton_profile",
    "soliton_residual",
    "rows_frame",
    "table_to_dict",
    "growth_to_dict",
    "write_convergence_csv",
    "write_loglog_files",
    "write_json_report",
    "write_norm_traces",
    "write_final_field",
    "summary_frame",
    "write_convergence_workbook",
]
