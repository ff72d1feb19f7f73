from .burgers import (DoublingResult, burgers_flow, burgers_flow_rk,
                      check_substep, default_rk_substeps, norm_doubling_time)
from .commutators import (CommutatorRoutes, commutator_AB, commutator_direct,
                          commutator_terms, double_commutator,
                          double_commutator_direct,
                          double_commutator_integer_terms,
                          double_commutator_terms, highest_order,
                          nested_bracket)
from .linear import (apply_generator, flow_exponent, generator_multiplier,
                     linear_flow)
from .nonlinear import apply_B, shock_time

__all__ = [
    "apply_B",
    "shock_time",
    "linear_flow",
    "apply_generator",
    "flow_exponent",
    "generator_multiplier",
    "burgers_flow",
    "burgers_flow_rk",
    "check_substep",
    "default_rk_substeps",
    "norm_doubling_time",
    "DoublingResult",
    "commutator_AB",
    "commutator_direct",
    "double_commutator",
    "double_commutator_direct",
    "commutator_terms",
    "double_commutator_terms",
    "double_commutator_integer_terms",
    "highest_order",
    "nested_bracket",
    "CommutatorRoutes",
]
