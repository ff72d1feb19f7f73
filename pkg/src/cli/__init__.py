# cli/__init__.py
"""
Configuration loading and subcommand handlers behind main.py.
"""

from .commands import (COMMANDS, build_study, cmd_commutator_check,
                       cmd_compare, cmd_converge, cmd_growth, cmd_local_error,
                       cmd_run, cmd_validate, commutator_suite, dispatch)
from .config import (BurgersBlock, CommutatorBlock, EquationBlock, GridBlock,
                     GrowthBlock, OutputBlock, RunConfig, SchemeBlock,
                     apply_overrides, check_config, load_config)

__all__ = [
    "RunConfig",
    "EquationBlock",
    "GridBlock",
    "SchemeBlock",
    "BurgersBlock",
    "OutputBlock",
    "CommutatorBlock",
    "GrowthBlock",
    "load_config",
    "apply_overrides",
    "check_config",
    "COMMANDS",
    "dispatch",
    "build_study",
    "commutator_suite",
    "cmd_validate",
    "cmd_run",
    "cmd_converge",
    "cmd_local_error",
    "cmd_commutator_check",
    "cmd_compare",
    "cmd_growth",
]
