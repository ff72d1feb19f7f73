from .evolve import evolve, monitor_functions
from .reference import default_ref_dt, reference_solution, verified_reference
from .steps import STEP_FUNCTIONS, lie_step, step_function, strang_step

__all__ = [
    "lie_step",
    "strang_step",
    "step_function",
    "STEP_FUNCTIONS",
    "evolve",
    "monitor_functions",
    "reference_solution",
    "verified_reference",
    "default_ref_dt",
]
