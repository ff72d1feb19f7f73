# =============================================================================
# 🧩 Test Module: test_studies.py
# =============================================================================
import math
from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np
import pytest

from dispersion import indices_for, make_preset
from fourier import Field, PeriodicGrid, linf_norm
from splitting_core import ConfigurationError, PresetName, SchemeKind
from studies import (InitialConditionSpec, StudySpec, compare_schemes,
                     errors_monotone, gaussian, growth_check,
                     local_error_study, prepare_study, random_bandlimited,
                     run_convergence, sine, soliton, soliton_residual)

GRID = PeriodicGrid(64, 2 * math.pi)
KDV = make_preset(PresetName.KDV)


# =============================================================================
# 🔧 Test Config
# =============================================================================
@dataclass(frozen=True)
class InvalidStudyCase:
    name: str
    final_time: float
    dt_list: Tuple[float, ...]


invalid_study_cases = [
    InvalidStudyCase("too-few-entries", 1.0, (0.5, 0.25, 0.125)),
    InvalidStudyCase("under-three-octaves", 1.0, (0.5, 0.25, 0.125, 0.125 / 1.5)),
    InvalidStudyCase("not-dividing", 1.0, (0.3, 0.1, 0.05, 0.025)),
    InvalidStudyCase("non-positive-time", 0.0, (0.5, 0.25, 0.125, 0.0625)),
]


@dataclass(frozen=True)
class LocalSlopeCase:
    scheme: SchemeKind
    window_hr: Tuple[float, float]
    min_hq: float


local_slope_cases = [
    LocalSlopeCase(SchemeKind.STRANG, (2.7, 3.3), 1.8),
    LocalSlopeCase(SchemeKind.LIE, (1.7, 2.3), 0.9),
]


def _small_study(scheme: SchemeKind = SchemeKind.STRANG, **overrides: Any) -> StudySpec:
    settings: Dict[str, Any] = dict(
        preset=KDV,
        grid=GRID,
        initial_condition=InitialConditionSpec("sine", {"amplitude": 0.5}),
        r=1,
        final_time=0.5,
        dt_list=tuple(0.5 / n for n in (8, 16, 32, 64)),
        scheme=scheme,
    )
    settings.update(overrides)
    return StudySpec(**settings)


# =============================================================================
# 🌱 Initial conditions
# =============================================================================
def test_sine_and_gaussian_families() -> None:
    """Sine and Gaussian families have their amplitude and reject bad parameters."""
    u = sine(GRID, amplitude=0.5, mode=2)
    assert linf_norm(u) == pytest.approx(0.5, rel=1e-12)
    assert u.mean() == pytest.approx(0.0, abs=1e-15)
    g = gaussian(GRID, amplitude=1.0, width=0.5)
    assert g.samples[GRID.n_points // 2] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        sine(GRID, mode=GRID.nyquist_index)
    with pytest.raises(ValueError):
        gaussian(GRID, width=0.0)


def test_random_bandlimited_is_seeded_and_bandlimited() -> None:
    """Seeds reproduce fields and no energy leaks past max_mode."""
    first = random_bandlimited(GRID, max_mode=6, amplitude=0.8, seed=11)
    second = random_bandlimited(GRID, max_mode=6, amplitude=0.8, seed=11)
    other = random_bandlimited(GRID, max_mode=6, amplitude=0.8, seed=12)

    assert np.array_equal(first.samples, second.samples)
    assert not np.array_equal(first.samples, other.samples)
    assert linf_norm(first) == pytest.approx(0.8, rel=1e-12)
    assert np.max(np.abs(first.spectrum[7:-6])) < 1e-15
    assert abs(first.spectrum[0]) < 1e-15


def test_initial_condition_spec_errors() -> None:
    """Unknown families and parameters name their key path."""
    with pytest.raises(ConfigurationError) as unknown:
        InitialConditionSpec("square-wave")
    assert unknown.value.key_path == "initial_condition.family"
    with pytest.raises(ConfigurationError):
        InitialConditionSpec("sine", {"frequency": 2}).build(GRID)
    assert InitialConditionSpec("sine", {"amplitude": 0.2}).describe() == {
        "family": "sine",
        "amplitude": 0.2,
    }


# =============================================================================
# 🧪 Soliton
# =============================================================================
def test_soliton_ansatz_solves_kdv() -> None:
    """The sech² ansatz solves KdV to roundoff."""
    points = np.linspace(-20.0, 20.0, 401)
    assert soliton_residual(0.3, points) <= 1e-10
    assert soliton_residual(0.3, points, t=1.5) <= 1e-10


def test_soliton_peaks_at_centre() -> None:
    """The soliton peaks at 3c at the domain centre."""
    grid = PeriodicGrid(1024, 80.0)
    u = soliton(grid, c=0.3)
    assert float(np.max(u.samples)) == pytest.approx(0.9)
    assert grid.nodes[int(np.argmax(u.samples))] == pytest.approx(40.0)


# =============================================================================
# 📊 Convergence studies
# =============================================================================
@pytest.mark.parametrize("case", invalid_study_cases, ids=lambda c: c.name)
def test_study_spec_invariants(case: InvalidStudyCase) -> None:
    """Short, narrow, non-dividing or zero-time studies are rejected."""
    with pytest.raises(ValueError):
        _small_study(final_time=case.final_time, dt_list=case.dt_list)


def test_study_spec_sorts_dt_list() -> None:
    """dt_list is sorted and the reference step derived from it."""
    spec = _small_study(dt_list=(0.5 / 64, 0.5 / 8, 0.5 / 32, 0.5 / 16))
    assert spec.dt_list == tuple(0.5 / n for n in (8, 16, 32, 64))
    assert spec.sobolev_orders == (1, 3, 6)
    assert spec.resolved_ref_dt() == pytest.approx(0.5 / 1280)


def test_strang_converges_at_second_order_on_small_study() -> None:
    """A small Strang study converges at second order."""
    table = run_convergence(_small_study(), threads=2)

    assert len(table.rows) == 4
    assert not table.under_resolved
    assert errors_monotone(table)
    assert table.fitted_order_hr > 1.5
    assert table.reference.self_convergence_delta <= 1e-10
    assert all(row.wallclock_s == 0.0 for row in table.rows)
    assert all(len(row.norm_traces["norm_hq"]) > 1 for row in table.rows)


def test_rows_do_not_depend_on_thread_count() -> None:
    """Pool size never changes the table."""
    spec = _small_study()
    context = prepare_study(spec)
    serial = run_convergence(spec, context, threads=1)
    pooled = run_convergence(spec, context, threads=3)
    assert [row.dt for row in serial.rows] == [row.dt for row in pooled.rows]
    assert [row.err_hr for row in serial.rows] == [row.err_hr for row in pooled.rows]
    assert serial.fitted_order_hq == pooled.fitted_order_hq


def test_zero_data_study_is_under_resolved() -> None:
    """Zero data give no admissible rows."""
    spec = _small_study(initial_condition=InitialConditionSpec("sine", {"amplitude": 0.0}))
    table = run_convergence(spec, threads=1)
    assert table.under_resolved
    assert np.isnan(table.fitted_order_hr)


@pytest.mark.slow
def test_lie_and_strang_orders_separate() -> None:
    """Strang beats Lie by at least 0.7 in H^r order."""
    comparison = compare_schemes(_small_study(dt_list=tuple(0.5 / n for n in (16, 32, 64, 128))))
    assert comparison.lie.reference == comparison.strang.reference
    assert comparison.order_gap >= 0.7


@pytest.mark.slow
def test_canonical_kdv_study() -> None:
    """The 256-point KdV study lands in [1.8, 2.2] in H^r."""
    spec = _small_study(
        grid=PeriodicGrid(256, 2 * math.pi),
        final_time=1.0,
        dt_list=tuple(1.0 / n for n in (16, 32, 64, 128, 256, 512)),
    )
    table = run_convergence(spec)
    assert 1.8 <= table.fitted_order_hr <= 2.2
    assert table.fitted_order_hq >= 1.0


# =============================================================================
# 🔬 Local error
# =============================================================================
@pytest.mark.parametrize("case", local_slope_cases, ids=lambda c: c.scheme.value)
def test_local_error_slopes(case: LocalSlopeCase) -> None:
    """One-step slopes match each scheme's local order."""
    table = local_error_study(
        sine(GRID, 0.5), [0.02, 0.01, 0.005, 0.0025], KDV.symbol, r=1, scheme=case.scheme
    )
    low, high = case.window_hr
    assert low <= table.fitted_order_hr <= high
    assert table.fitted_order_hq >= case.min_hq
    assert table.reference is not None
    assert table.reference.self_convergence_delta <= 1e-10
    assert all(row.admissible for row in table.rows)


@pytest.mark.slow
def test_canonical_local_error_slopes() -> None:
    """Strang one-step errors on the 256-point KdV problem over T/64 ... T/1024."""
    grid = PeriodicGrid(256, 2 * math.pi)
    dts = [1.0 / n for n in (64, 128, 256, 512, 1024)]
    table = local_error_study(sine(grid, 0.5), dts, KDV.symbol, r=1)
    assert 2.7 <= table.fitted_order_hr <= 3.3
    assert table.fitted_order_hq >= 1.8
    assert not table.under_resolved


def test_local_error_input_validation() -> None:
    """Empty lists and dt = 0 are rejected."""
    with pytest.raises(ValueError):
        local_error_study(sine(GRID, 0.5), [], KDV.symbol, r=1)
    with pytest.raises(ValueError):
        local_error_study(sine(GRID, 0.5), [0.01, 0.0], KDV.symbol, r=1)


# =============================================================================
# 🌱 Regularity growth
# =============================================================================
def test_growth_constant_is_stable_across_amplitudes() -> None:
    """Scaled sines share a growth constant within a factor of two."""
    amplitudes = [0.1, 0.2, 0.3, 0.4]
    family = [sine(GRID, a) for a in amplitudes]
    report = growth_check(family, 0.01, 0.5, indices_for(1, 3), amplitudes=amplitudes)

    assert report.all_bounded
    assert report.c_fit > 0
    assert 1.0 <= report.stability_factor <= 2.0
    assert [run.amplitude for run in report.runs] == amplitudes
    assert report.calibration_index == len(amplitudes) - 1
    assert all(len(run.times) == len(run.norm_hp) == 50 for run in report.runs)
    # larger data reach the shared α t horizon sooner
    horizons = [run.fit_time for run in report.runs]
    assert horizons == sorted(horizons, reverse=True)
    assert horizons[0] == pytest.approx(0.5)


def test_growth_of_zero_data() -> None:
    """Zero data give c = 0 and stay bounded."""
    report = growth_check([Field.constant(GRID, 0.0)], 0.1, 0.5, indices_for(1, 3))
    assert report.c_fit == 0.0
    assert report.stability_factor == 1.0
    assert report.all_bounded
    with pytest.raises(ValueError):
        growth_check([sine(GRID, 0.1)], 0.0, 0.5, indices_for(1, 3))


def test_growth_family_defaults_amplitude_to_peak() -> None:
    """A lone run takes its peak as amplitude and calibrates itself."""
    report = growth_check([sine(GRID, 0.25)], 0.05, 0.2, indices_for(1, 3))
    assert report.runs[0].amplitude == pytest.approx(0.25)
    assert report.runs[0].fitted_c == report.c_fit
    assert report.stability_factor == 1.0


def test_growth_bound_fails_on_mismatched_family() -> None:
    """A rough high-mode run calibrates a constant too small for smooth low-mode data."""
    grid = PeriodicGrid(128, 2 * math.pi)
    family = [sine(grid, 0.3), sine(grid, 0.05, mode=5)]
    report = growth_check(family, 0.01, 0.5, indices_for(1, 3))

    assert report.calibration_index == 1
    assert report.runs[1].bounded
    assert not report.runs[0].bounded
    assert not report.all_bounded


def test_doubling_final_time_keeps_growth_constant() -> None:
    """Refitting over twice the final time never shrinks c by more than half."""
    family = [sine(GRID, a) for a in (0.1, 0.2, 0.3)]
    short = growth_check(family, 0.01, 0.5, indices_for(1, 3))
    long = growth_check(family, 0.01, 1.0, indices_for(1, 3))
    assert long.c_fit >= 0.5 * short.c_fit
    assert short.all_bounded
