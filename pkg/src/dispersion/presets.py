# =============================================================================
# 📚 Named equations u_t = P(∂x) u + u u_x
# =============================================================================
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Union

from splitting_core import ConfigurationError, PresetName, custom_logger

from .symbols import DispersionSymbol


@dataclass(frozen=True)
class EquationPreset:
    name: PresetName
    symbol: DispersionSymbol
    beta: Optional[float] = None

    @property
    def label(self) -> str:
        if self.name is PresetName.BENNEY_LIN:
            return f"{self.name.value}(β={self.beta:g})"
        return self.name.value


def _preset_terms(name: PresetName, beta: float) -> Dict[int, float]:
    if name is PresetName.VISCOUS_BURGERS:
        return {2: 1.0}
    if name is PresetName.KDV:
        return {3: 1.0}
    if name is PresetName.BENNEY_LIN:
        return {2: -beta, 3: -1.0, 4: -beta, 5: -1.0}
    return {3: -1.0, 5: 1.0}


def make_preset(name: Union[str, PresetName], beta: float = 0.0) -> EquationPreset:
    """
    Return the exact dispersion polynomial of a named equation.

    - viscous-burgers: X²
    - kdv: X³
    - benney-lin(β): -X³ - β(X² + X⁴) - X⁵, β >= 0
    - kawahara: X⁵ - X³

    Raises:
        ConfigurationError: Unknown name or negative β
    """
    try:
        preset_name = PresetName(name)
    except ValueError as e:
        known = ", ".join(p.value for p in PresetName)
        raise ConfigurationError(
            f"Unknown preset {name!r} (expected one of: {known})", "equation.preset"
        ) from e

    if preset_name is PresetName.BENNEY_LIN:
        if beta < 0:
            raise ConfigurationError(f"beta must be >= 0, got {beta}", "equation.beta")
        symbol = DispersionSymbol.from_terms(_preset_terms(preset_name, beta))
        custom_logger.debug("Built preset %s with β=%g", preset_name.value, beta)
        return EquationPreset(preset_name, symbol, beta=float(beta))

    symbol = DispersionSymbol.from_terms(_preset_terms(preset_name, beta))
    return EquationPreset(preset_name, symbol)
