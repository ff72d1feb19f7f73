#!/usr/bin/env python3
"""
Batch front-end for the splitting solver and its verification harness.

- Reads a YAML run configuration (`--set dotted.key=value` overrides single keys).
- Dispatches to validate, run, converge, local-error, commutator-check, compare or growth.
- Writes CSV / JSON / plot data (and optionally an Excel workbook) under output.directory.
- Exits 0 on success, 1 on configuration errors, 2 on validation failures, 3 on guard violations.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from cli import COMMANDS, dispatch
from splitting_core import custom_logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitting",
        description="Lie/Strang splitting for u_t = P(d/dx)u + u u_x with convergence checks",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="Subcommand to run")
    parser.add_argument("config", type=Path, help="YAML run configuration")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override one config key, e.g. --set scheme.r=2 (repeatable)",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    custom_logger.info("🚀 %s %s", args.command, args.config)
    return dispatch(args.command, args.config, args.overrides)


if __name__ == "__main__":
    sys.exit(main())
