from .grid import Field, PeriodicGrid
from .norms import l2_norm, linf_norm, relative_linf_error, sobolev_norm
from .operators import (dealias, dealiased_product, derivative,
                        derivative_multiplier, from_spectrum, interpolate,
                        to_spectrum)

__all__ = [
    "PeriodicGrid",
    "Field",
    "to_spectrum",
    "from_spectrum",
    "derivative",
    "derivative_multiplier",
    "dealias",
    "dealiased_product",
    "interpolate",
    "sobolev_norm",
    "l2_norm",
    "linf_norm",
    "relative_linf_error",
]
