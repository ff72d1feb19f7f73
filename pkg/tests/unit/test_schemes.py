# =============================================================================
# 🧩 Test Module: test_schemes.py
# =============================================================================
import math
from dataclasses import dataclass

import numpy as np
import pytest

from dispersion import indices_for, make_preset
from fourier import Field, PeriodicGrid, l2_norm, linf_norm, sobolev_norm
from schemes import (default_ref_dt, evolve, lie_step, reference_solution,
                     step_function, strang_step, verified_reference)
from schemes import steps as steps_module
from splitting_core import (GuardViolationError, Monitor, NonConvergenceError,
                            PresetName, ReferenceInvalidError, SchemeKind,
                            StepPlan)
from studies import fit_order, sine, soliton, soliton_profile
from tests.assertions import assert_fields_close

GRID = PeriodicGrid(64, 2 * math.pi)
KDV = make_preset(PresetName.KDV).symbol


# =============================================================================
# 🔧 Test Config
# =============================================================================
@dataclass(frozen=True)
class StepCase:
    scheme: SchemeKind


step_cases = [StepCase(SchemeKind.LIE), StepCase(SchemeKind.STRANG)]


@dataclass(frozen=True)
class DriftCase:
    name: str
    preset: PresetName


drift_cases = [DriftCase("kdv", PresetName.KDV), DriftCase("kawahara", PresetName.KAWAHARA)]


def _smooth_field() -> Field:
    return Field.from_function(GRID, lambda x: 0.3 * np.sin(x) + 0.1 * np.cos(2 * x))


# =============================================================================
# 🪜 Single steps
# =============================================================================
@pytest.mark.parametrize("case", step_cases, ids=lambda c: c.scheme.value)
def test_constants_are_fixed_points(case: StepCase) -> None:
    """A constant field is a fixed point of both schemes."""
    u = Field.constant(GRID, 0.4)
    step = step_function(case.scheme)
    assert_fields_close(step(u, 0.1, KDV), u, 1e-12)


@pytest.mark.parametrize("case", step_cases, ids=lambda c: c.scheme.value)
def test_zero_and_negative_dt(case: StepCase) -> None:
    """dt = 0 is the identity and dt < 0 is rejected."""
    u = _smooth_field()
    step = step_function(case.scheme)
    assert step(u, 0.0, KDV) is u
    with pytest.raises(ValueError):
        step(u, -0.01, KDV)


def test_strang_step_composition_order(monkeypatch: pytest.MonkeyPatch) -> None:
    """Strang runs A/2, B, A/2; Lie runs B then A."""
    calls = []
    monkeypatch.setattr(steps_module, "linear_flow", lambda u, t, *a, **k: calls.append(("A", t)) or u)
    monkeypatch.setattr(steps_module, "burgers_flow", lambda u, t, *a, **k: calls.append(("B", t)) or u)

    strang_step(_smooth_field(), 0.2, KDV)
    assert calls == [("A", 0.1), ("B", 0.2), ("A", 0.1)]

    calls.clear()
    lie_step(_smooth_field(), 0.2, KDV)
    assert calls == [("B", 0.2), ("A", 0.2)]


def test_strang_is_reflection_reversible() -> None:
    """Evolving the reflected result returns the reflected start."""
    # KdV maps to its time reversal under x -> -x; symmetric Strang inherits this
    u0 = _smooth_field()
    plan = StepPlan.covering(SchemeKind.STRANG, 0.05, 0.5, (1, 3, 6))
    forward = evolve(u0, plan, KDV).final
    back = evolve(forward.reflect(), plan, KDV).final
    assert_fields_close(back, u0.reflect(), 1e-9, "reflection reversibility")


# =============================================================================
# ⏱️ evolve
# =============================================================================
def test_evolve_records_norms_and_snapshots() -> None:
    """Every monitor has one value per step and snapshots are thinned."""
    plan = StepPlan.covering(SchemeKind.STRANG, 0.001, 0.5, (1, 3, 6))
    trajectory = evolve(sine(GRID, 0.5), plan, KDV)

    assert trajectory.steps_taken == 500
    assert len(trajectory.times) == 501
    assert set(trajectory.norm_traces) == set(Monitor)
    assert all(len(series) == 501 for series in trajectory.norm_traces.values())
    assert trajectory.snapshot_times[0] == 0.0
    assert trajectory.snapshot_times[-1] == pytest.approx(0.5)
    assert len(trajectory.fields) == len(trajectory.snapshot_times) <= 202
    assert trajectory.final is trajectory.fields[-1]


def test_hq_norm_stays_bounded_on_kdv() -> None:
    """H^q stays within twice its initial value on the KdV run."""
    plan = StepPlan.covering(SchemeKind.STRANG, 0.001, 1.0, (1, 3, 6))
    trajectory = evolve(sine(GRID, 0.5), plan, KDV)
    series = trajectory.norm_traces[Monitor.NORM_HQ]
    assert max(series) <= 2.0 * series[0]


@pytest.mark.parametrize("case", drift_cases, ids=lambda c: c.name)
def test_strang_conserves_l2_on_skew_symbols(case: DriftCase) -> None:
    """Skew linear part and Burgers both keep the L² norm; only dealiasing drifts."""
    symbol = make_preset(case.preset).symbol
    orders = indices_for(1, symbol.degree).as_tuple()
    u0 = sine(GRID, 0.5)
    final = evolve(u0, StepPlan.covering(SchemeKind.STRANG, 0.001, 1.0, orders), symbol).final
    assert abs(l2_norm(final) - l2_norm(u0)) <= 1e-6


def test_two_half_steps_agree_with_one_step_to_third_order() -> None:
    """Two Strang half-steps differ from one full step by O(dt³)."""
    u0 = sine(GRID, 0.5)
    dts = [0.04, 0.02, 0.01, 0.005]
    gaps = []
    for dt in dts:
        halves = strang_step(strang_step(u0, dt / 2, KDV), dt / 2, KDV)
        gaps.append(sobolev_norm(halves - strang_step(u0, dt, KDV), 1))
    assert fit_order(dts, gaps).slope >= 2.7


def test_guard_violation_carries_context() -> None:
    """Guard failures carry the step, shock time and partial trajectory."""
    plan = StepPlan.covering(SchemeKind.STRANG, 0.5, 1.0, (1, 3, 6))
    with pytest.raises(GuardViolationError) as error:
        evolve(sine(GRID, 2.0), plan, KDV)
    assert error.value.step_index == 1
    assert error.value.shock_time == pytest.approx(0.5, rel=1e-2)
    assert error.value.trajectory is not None
    assert error.value.trajectory.steps_taken == 0


def test_non_convergence_becomes_guard_violation(monkeypatch: pytest.MonkeyPatch) -> None:
    """A stalled Burgers solve surfaces as a guard violation."""
    def stalled(u, t, opts=None):
        raise NonConvergenceError(100, 1e-3)

    monkeypatch.setattr(steps_module, "burgers_flow", stalled)
    plan = StepPlan.covering(SchemeKind.LIE, 0.1, 0.2, (1, 3, 6))
    with pytest.raises(GuardViolationError):
        evolve(sine(GRID, 0.5), plan, KDV)


def test_step_plan_requires_divisibility() -> None:
    """dt must divide T."""
    with pytest.raises(ValueError):
        StepPlan.covering(SchemeKind.STRANG, 0.3, 1.0, (1, 3, 6))
    assert StepPlan.covering(SchemeKind.STRANG, 0.125, 1.0, (1, 3, 6)).steps == 8


# =============================================================================
# 🎯 Reference integrator
# =============================================================================
def test_default_ref_dt() -> None:
    """The default reference step is T/n at most dt_min/20."""
    assert default_ref_dt(1.0, 1.0 / 512) == pytest.approx(1.0 / 10240)
    assert default_ref_dt(1.0, 0.3) <= 0.3 / 20


def test_reference_of_small_data_follows_linear_flow() -> None:
    """Tiny data follow the linear flow."""
    u0 = sine(GRID, 1e-6)
    result = reference_solution(u0, 1.0, KDV, 0.01)
    expected = Field.from_function(GRID, lambda x: 1e-6 * np.sin(x - 1.0))
    assert linf_norm(result - expected) <= 1e-11


def test_reference_converges_to_itself() -> None:
    """Halving ref_dt moves the reference by less than 1e-10."""
    fine, metadata = verified_reference(sine(GRID, 0.5), 0.5, KDV, 1e-3, r=1)
    assert metadata.self_convergence_delta <= 1e-10
    assert metadata.steps == 500
    assert fine.is_finite()


def test_reference_rejects_loose_threshold() -> None:
    """An unreachable threshold raises ReferenceInvalidError."""
    with pytest.raises(ReferenceInvalidError):
        verified_reference(sine(GRID, 0.5), 0.5, KDV, 0.1, r=1, threshold=1e-16)


def test_reference_input_validation() -> None:
    """Zero time returns the input; bad times raise."""
    u0 = sine(GRID, 0.5)
    assert reference_solution(u0, 0.0, KDV, 0.1) is u0
    with pytest.raises(ValueError):
        reference_solution(u0, 1.0, KDV, 0.0)
    with pytest.raises(ValueError):
        reference_solution(u0, -1.0, KDV, 0.1)


@pytest.mark.slow
def test_reference_reproduces_kdv_soliton() -> None:
    """The reference carries the KdV soliton to 1e-6."""
    grid = PeriodicGrid(1024, 80.0)
    c = 0.3
    u0 = soliton(grid, c)
    result = reference_solution(u0, 1.0, KDV, 1e-3)
    exact = soliton_profile(grid.nodes, 1.0, c, grid.length / 2, grid.length)
    assert np.max(np.abs(result.samples - exact)) <= 1e-6
