from .indices import SobolevIndices, indices_for
from .presets import EquationPreset, make_preset
from .symbols import (DissipativityReport, DispersionSymbol, symbol_values,
                      validate_dissipativity)

__all__ = [
    "DispersionSymbol",
    "DissipativityReport",
    "symbol_values",
    "validate_dissipativity",
    "EquationPreset",
    "make_preset",
    "SobolevIndices",
    "indices_for",
]
