"""
Declarative run configuration.

A YAML file with nested blocks is validated by pydantic models that forbid unknown
keys; `--set dotted.key=value` flags override single keys before validation.
Semantic checks that span blocks (soliton only with KdV, Δt dividing the final
time, grid shape) raise ConfigurationError with the offending key path.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import (Annotated, Any, Dict, List, Literal, Optional, Sequence,
                    Tuple, Union)

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from dispersion import EquationPreset, SobolevIndices, indices_for, make_preset
from fourier import PeriodicGrid
from splitting_core import (BurgersMethod, BurgersSolveOptions,
                            ConfigurationError, NumericsDefaults, OutputFormat,
                            PathsConfig, PresetName, SchemeKind, custom_logger)
from studies import InitialConditionSpec


class _Block(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


# =============================================================================
# 📚 Equation & grid
# =============================================================================
class EquationBlock(_Block):
    preset: PresetName = PresetName.KDV
    beta: float = Field(0.0, ge=0.0, description="Benney-Lin β")
    strict: bool = Field(True, description="Fail on Re P(ik) > 0 instead of warning")


class GridBlock(_Block):
    n_points: int = Field(256, ge=NumericsDefaults.MIN_POINTS)
    length: float = Field(2.0 * math.pi, gt=0.0)


# =============================================================================
# 🌊 Initial conditions (discriminated on `family`)
# =============================================================================
class SineBlock(_Block):
    family: Literal["sine"] = "sine"
    amplitude: float = 0.5
    mode: int = Field(1, ge=1)


class GaussianBlock(_Block):
    family: Literal["gaussian"]
    amplitude: float = 1.0
    width: float = Field(0.5, gt=0.0)
    center: Optional[float] = None


class SolitonBlock(_Block):
    family: Literal["soliton"]
    c: float = Field(0.3, gt=0.0)
    center: Optional[float] = None


class RandomBandlimitedBlock(_Block):
    family: Literal["random-bandlimited"]
    max_mode: int = Field(8, ge=1)
    amplitude: float = 1.0
    seed: int = 0


InitialConditionBlock = Annotated[
    Union[SineBlock, GaussianBlock, SolitonBlock, RandomBandlimitedBlock],
    Field(discriminator="family"),
]


# =============================================================================
# ⏱️ Scheme & Burgers
# =============================================================================
class SchemeBlock(_Block):
    kind: SchemeKind = SchemeKind.STRANG
    dt: Optional[float] = Field(None, gt=0.0)
    dt_list: Optional[List[Annotated[float, Field(gt=0.0)]]] = None
    dt_divisors: Optional[List[Annotated[int, Field(ge=1)]]] = None
    final_time: float = Field(1.0, gt=0.0)
    r: int = Field(1, ge=1)
    ref_dt: Optional[float] = Field(None, gt=0.0)

    @model_validator(mode="after")
    def _one_step_source(self) -> SchemeBlock:
        given = [name for name in ("dt", "dt_list", "dt_divisors") if getattr(self, name) is not None]
        if len(given) > 1:
            raise ValueError(f"give only one of dt, dt_list, dt_divisors (got {', '.join(given)})")
        return self

    def step_sizes(self) -> List[float]:
        """Δt values, largest first; dt_divisors n map to final_time / n."""
        if self.dt_divisors is not None:
            values = [self.final_time / n for n in self.dt_divisors]
        elif self.dt_list is not None:
            values = list(self.dt_list)
        elif self.dt is not None:
            values = [self.dt]
        else:
            raise ConfigurationError("no step size given (dt, dt_list or dt_divisors)", "scheme")
        return sorted(values, reverse=True)


class BurgersBlock(_Block):
    method: BurgersMethod = BurgersMethod.CHARACTERISTICS
    tolerance: float = Field(NumericsDefaults.BURGERS_TOLERANCE, gt=0.0)
    max_iterations: int = Field(NumericsDefaults.BURGERS_MAX_ITERATIONS, ge=1)
    safety_fraction: float = Field(NumericsDefaults.SAFETY_FRACTION, gt=0.0, lt=1.0)
    rk_substeps: Optional[int] = Field(None, ge=1)
    dealias_output: bool = True

    def options(self) -> BurgersSolveOptions:
        return BurgersSolveOptions(
            tolerance=self.tolerance,
            max_iterations=self.max_iterations,
            safety_fraction=self.safety_fraction,
            method=self.method,
            rk_substeps=self.rk_substeps,
            dealias_output=self.dealias_output,
        )


# =============================================================================
# 💾 Output & optional studies
# =============================================================================
class OutputBlock(_Block):
    directory: Optional[str] = None
    formats: List[OutputFormat] = Field(
        default_factory=lambda: [OutputFormat.CSV, OutputFormat.JSON, OutputFormat.DAT]
    )
    record_wallclock: bool = False


class CommutatorBlock(_Block):
    presets: List[PresetName] = Field(default_factory=lambda: list(PresetName))
    seeds: int = Field(20, ge=1)
    max_mode: Optional[int] = Field(None, ge=1)
    beta: float = Field(1.0, ge=0.0, description="β used for the Benney-Lin preset")


class GrowthBlock(_Block):
    amplitudes: List[float] = Field(default_factory=lambda: [0.1, 0.2, 0.3, 0.4, 0.5])
    dt: float = Field(0.01, gt=0.0)
    final_time: float = Field(0.5, gt=0.0)


# =============================================================================
# 🧾 RunConfig
# =============================================================================
class RunConfig(_Block):
    equation: EquationBlock = Field(default_factory=EquationBlock)
    grid: GridBlock = Field(default_factory=GridBlock)
    initial_condition: InitialConditionBlock = Field(default_factory=SineBlock)
    scheme: SchemeBlock = Field(default_factory=SchemeBlock)
    burgers: BurgersBlock = Field(default_factory=BurgersBlock)
    output: OutputBlock = Field(default_factory=OutputBlock)
    commutator: Optional[CommutatorBlock] = None
    growth: Optional[GrowthBlock] = None

    # ------------------------------------------------------------------------
    # Domain objects
    # ------------------------------------------------------------------------
    def build_grid(self) -> PeriodicGrid:
        try:
            return PeriodicGrid(self.grid.n_points, self.grid.length)
        except ValueError as e:
            raise ConfigurationError(str(e), "grid") from e

    def build_preset(self) -> EquationPreset:
        return make_preset(self.equation.preset, self.equation.beta)

    def initial_condition_spec(self) -> InitialConditionSpec:
        params = self.initial_condition.model_dump(exclude={"family"}, exclude_none=True)
        return InitialConditionSpec(self.initial_condition.family, params)

    def indices(self) -> SobolevIndices:
        return indices_for(self.scheme.r, self.build_preset().symbol.degree)

    def output_dir(self) -> Path:
        return Path(self.output.directory) if self.output.directory else PathsConfig.OUTPUT_DIR

    def wants(self, fmt: OutputFormat) -> bool:
        return fmt in self.output.formats

    def echo(self) -> Dict[str, Any]:
        """JSON-ready dump for reports."""
        return self.model_dump(mode="json")


# =============================================================================
# 🔧 Loading
# =============================================================================
def _parse_override(item: str) -> Tuple[List[str], Any]:
    key, sep, raw = item.partition("=")
    if not sep or not key.strip():
        raise ConfigurationError(f"override {item!r} is not of the form dotted.key=value", "--set")
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"cannot parse value {raw!r}: {e}", key) from e
    return key.strip().split("."), value


def apply_overrides(data: Dict[str, Any], overrides: Sequence[str]) -> Dict[str, Any]:
    """Set each dotted key in place, creating intermediate blocks."""
    for item in overrides:
        path, value = _parse_override(item)
        node = data
        for part in path[:-1]:
            child = node.setdefault(part, {})
            if not isinstance(child, dict):
                raise ConfigurationError("is not a block", ".".join(path[:-1]))
            node = child
        node[path[-1]] = value
    return data


def _first_error_path(error: ValidationError) -> str:
    first = error.errors()[0]
    return ".".join(str(part) for part in first.get("loc", ()))


def check_config(config: RunConfig) -> RunConfig:
    """
    Cross-block rules pydantic cannot express per field.

    Raises:
        ConfigurationError: With the offending key path
    """
    config.build_grid()
    preset = config.build_preset()

    if config.initial_condition.family == "soliton" and preset.name is not PresetName.KDV:
        raise ConfigurationError(
            f"the soliton initial condition needs the kdv preset, got {preset.name.value}",
            "initial_condition.family",
        )

    key = (
        "scheme.dt_divisors"
        if config.scheme.dt_divisors is not None
        else "scheme.dt_list" if config.scheme.dt_list is not None else "scheme.dt"
    )
    if config.scheme.dt is not None or config.scheme.dt_list is not None:
        for dt in config.scheme.step_sizes():
            n = round(config.scheme.final_time / dt)
            if n < 1 or abs(n * dt - config.scheme.final_time) > NumericsDefaults.DIVISIBILITY_TOL:
                raise ConfigurationError(
                    f"dt={dt!r} does not divide final_time={config.scheme.final_time!r}", key
                )
    return config


def load_config(path: Union[str, Path], overrides: Sequence[str] = ()) -> RunConfig:
    """
    Read, override, validate.

    Raises:
        ConfigurationError: Unreadable file, bad YAML, unknown key, invalid value
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigurationError(f"cannot read config: {e}", str(path)) from e
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"malformed YAML: {e}", str(path)) from e
    if not isinstance(data, dict):
        raise ConfigurationError("top level must be a mapping", str(path))

    apply_overrides(data, overrides)
    try:
        config = RunConfig.model_validate(data)
    except ValidationError as e:
        key_path = _first_error_path(e)
        custom_logger.error("❌ Invalid config %s at %s", path, key_path or "<root>")
        raise ConfigurationError(e.errors()[0]["msg"], key_path) from e
    return check_config(config)
