# =============================================================================
# 🧩 Test Module: test_cli_commands.py
# =============================================================================
import json
import math
import re
from pathlib import Path
from typing import Any, Dict

import pytest
import yaml

from main import main
from splitting_core import ExcelStyling, ExitCode, PathsConfig
from subflows import commutators as commutator_module
from tests.assertions import (assert_convergence_csv, assert_file_exists,
                              assert_study_artifacts, assert_valid_excel)

SMALL_GRID = {"n_points": 64, "length": 2 * math.pi}


# =============================================================================
# 🧹 Fixtures
# =============================================================================
@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    """Artifact directory for one command run."""
    return tmp_path / "out"


@pytest.fixture
def write_config(tmp_path: Path, out_dir: Path):
    """
    Write a YAML config with a small grid and the per-test output directory.

    Returns:
        Callable taking the config blocks and returning the file path.
    """

    def _write(**blocks: Any) -> Path:
        document: Dict[str, Any] = {"grid": dict(SMALL_GRID)}
        document.update(blocks)
        document.setdefault("output", {})["directory"] = str(out_dir)
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump(document), encoding="utf-8")
        return path

    return _write


def _run(command: str, config: Path, *overrides: str) -> int:
    argv = [command, str(config)]
    for item in overrides:
        argv += ["--set", item]
    return main(argv)


# =============================================================================
# ✅ validate
# =============================================================================
def test_validate_reports_indices(write_config, out_dir: Path) -> None:
    """validate writes the Sobolev indices, verdict and shock time."""
    config = write_config(output={"formats": ["json"]})
    assert _run("validate", config) == ExitCode.SUCCESS

    payload = json.loads((out_dir / "validate.json").read_text(encoding="utf-8"))
    assert payload["indices"] == {"r": 1, "q": 3, "p": 6}
    assert payload["verdict"] == "PASS"
    assert payload["shock_time"] == pytest.approx(2.0)


def test_strict_benney_lin_fails_validation(out_dir: Path) -> None:
    """Benney–Lin on 4π is rejected in strict mode and accepted otherwise."""
    config = PathsConfig.CONFIGS_DIR / "benney_lin_strict.yaml"
    assert _run("validate", config, f"output.directory={out_dir}") == ExitCode.VALIDATION_FAILURE
    assert _run("validate", config, f"output.directory={out_dir}", "equation.strict=false") == ExitCode.SUCCESS


def test_malformed_key_is_a_config_error(write_config) -> None:
    """An unknown scheme key maps to the configuration exit code."""
    config = write_config(scheme={"dt": 0.1, "step": 3})
    assert _run("validate", config) == ExitCode.CONFIG_ERROR


# =============================================================================
# ▶️ run
# =============================================================================
def test_run_writes_traces_and_final_field(write_config, out_dir: Path) -> None:
    """run leaves one trace row per step and one line per node."""
    config = write_config(scheme={"dt": 0.01, "final_time": 0.5})
    assert _run("run", config) == ExitCode.SUCCESS

    traces = (out_dir / "norm_traces.csv").read_text(encoding="utf-8").splitlines()
    assert traces[0] == "t,norm_hr,norm_hq,norm_hp,linf"
    assert len(traces) == 52
    field_lines = (out_dir / "final_field.dat").read_text(encoding="utf-8").splitlines()
    assert len(field_lines) == 64


def test_constant_data_stays_put(write_config, out_dir: Path) -> None:
    """Zero data stays zero through a full run."""
    config = write_config(
        initial_condition={"family": "sine", "amplitude": 0.0},
        scheme={"dt": 0.1, "final_time": 1.0},
    )
    assert _run("run", config) == ExitCode.SUCCESS
    values = [float(line.split()[1]) for line in (out_dir / "final_field.dat").read_text().splitlines()]
    assert max(abs(v) for v in values) == 0.0


def test_non_dividing_dt_is_a_config_error(write_config) -> None:
    """A step that does not divide T is a configuration error."""
    config = write_config(scheme={"dt": 0.3, "final_time": 1.0})
    assert _run("run", config) == ExitCode.CONFIG_ERROR


def test_shock_guard_exit_code(write_config, capsys: pytest.CaptureFixture[str]) -> None:
    """A substep past the shock guard exits with the guard code and logs shock_time."""
    config = write_config(
        initial_condition={"family": "sine", "amplitude": 2.0},
        scheme={"dt": 0.5, "final_time": 1.0},
    )
    assert _run("run", config) == ExitCode.GUARD_VIOLATION
    assert "shock_time" in capsys.readouterr().out


# =============================================================================
# 📈 converge / local-error
# =============================================================================
def _small_study(**scheme: Any) -> Dict[str, Any]:
    block = {"kind": "strang", "final_time": 0.5, "dt_divisors": [8, 16, 32, 64], "r": 1}
    block.update(scheme)
    return block


def test_converge_artifacts_and_echo(
    write_config, out_dir: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """converge writes every artifact and echoes the fitted orders from the JSON."""
    config = write_config(scheme=_small_study(), output={"formats": ["csv", "json", "dat", "xlsx"]})
    assert _run("converge", config) == ExitCode.SUCCESS

    assert_study_artifacts(out_dir, "convergence", rows=4)
    assert_valid_excel(out_dir / "convergence.xlsx", [ExcelStyling.SUMMARY_SHEET, ExcelStyling.ROWS_SHEET])

    payload = json.loads((out_dir / "convergence.json").read_text(encoding="utf-8"))
    printed = re.search(r"fitted_order_hr=(\S+) fitted_order_hq=(\S+)", capsys.readouterr().out)
    assert printed is not None
    assert float(printed.group(1)) == payload["table"]["fitted_order_hr"]
    assert float(printed.group(2)) == payload["table"]["fitted_order_hq"]
    assert payload["table"]["fitted_order_hr"] > 1.5
    assert payload["config"]["scheme"]["dt_divisors"] == [8, 16, 32, 64]


def test_converge_is_deterministic(write_config, out_dir: Path) -> None:
    """Two identical converge runs produce byte-identical CSV and JSON."""
    config = write_config(scheme=_small_study(), output={"formats": ["csv", "json"]})
    assert _run("converge", config, "burgers.rk_substeps=20", "burgers.method=spectral-rk4") == ExitCode.SUCCESS
    first = [(out_dir / name).read_bytes() for name in ("convergence.csv", "convergence.json")]
    assert _run("converge", config, "burgers.rk_substeps=20", "burgers.method=spectral-rk4") == ExitCode.SUCCESS
    second = [(out_dir / name).read_bytes() for name in ("convergence.csv", "convergence.json")]
    assert first == second


def test_zero_data_study_is_under_resolved(write_config, out_dir: Path) -> None:
    """A study with nothing to measure exits as under-resolved."""
    config = write_config(initial_condition={"family": "sine", "amplitude": 0.0}, scheme=_small_study())
    assert _run("converge", config) == ExitCode.VALIDATION_FAILURE
    assert_convergence_csv(out_dir / "convergence.csv", rows=4)


def test_local_error_study(write_config, out_dir: Path) -> None:
    """local-error writes a table whose H^r errors shrink with dt."""
    config = write_config(scheme={"dt_list": [0.02, 0.01, 0.005, 0.0025], "final_time": 1.0})
    assert _run("local-error", config) == ExitCode.SUCCESS
    frame = assert_convergence_csv(out_dir / "local_error.csv", rows=4)
    assert (frame["err_hr"].diff().dropna() < 0).all()


@pytest.mark.slow
def test_compare_separates_orders(write_config, out_dir: Path) -> None:
    """compare reports a Strang-over-Lie order gap of at least 0.7."""
    config = write_config(scheme=_small_study(dt_divisors=[16, 32, 64, 128]), output={"formats": ["csv", "json"]})
    assert _run("compare", config) == ExitCode.SUCCESS
    payload = json.loads((out_dir / "compare.json").read_text(encoding="utf-8"))
    assert payload["order_gap"] >= 0.7
    assert_file_exists(out_dir / "convergence_lie.csv")


# =============================================================================
# 🧮 commutator-check / growth
# =============================================================================
def test_commutator_check_passes(write_config, out_dir: Path) -> None:
    """Both commutator routes agree for every preset."""
    config = write_config(commutator={"seeds": 3}, output={"formats": ["csv", "json"]})
    assert _run("commutator-check", config) == ExitCode.SUCCESS

    payload = json.loads((out_dir / "commutator_check.json").read_text(encoding="utf-8"))
    assert [item["verdict"] for item in payload["results"]] == ["PASS"] * 4
    assert_file_exists(out_dir / "commutator_check.csv")


def test_commutator_check_catches_wrong_binomial(write_config, monkeypatch: pytest.MonkeyPatch) -> None:
    """A corrupted binomial coefficient fails the check."""
    monkeypatch.setattr(commutator_module, "comb", lambda n, k: math.comb(n, k) + (k == 1))
    config = write_config(commutator={"seeds": 2, "presets": ["kdv"]})
    assert _run("commutator-check", config) == ExitCode.VALIDATION_FAILURE


def test_growth_command(write_config, out_dir: Path) -> None:
    """growth reports a bounded, stable family."""
    config = write_config(growth={"amplitudes": [0.1, 0.2, 0.3], "dt": 0.01, "final_time": 0.5})
    assert _run("growth", config) == ExitCode.SUCCESS

    payload = json.loads((out_dir / "growth.json").read_text(encoding="utf-8"))
    assert payload["all_bounded"] is True
    assert payload["stability_factor"] <= 2.0
    assert len(payload["runs"]) == 3
