"""
Run the committed acceptance studies end to end.

- Each study is a (subcommand, config) pair from the configs folder.
- Artifacts land under the reports directory, one subfolder per study.
- The reports folder is reset first so stale files never mix with a new run.
- A study passes when its exit code matches the expected one (the Benney-Lin
  strict config is expected to fail validation).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import List

from cli import dispatch
from helpers import file_helper
from splitting_core import ExitCode, FolderType, PathsConfig, custom_logger


@dataclass(frozen=True)
class Study:
    command: str
    config: str
    expected: ExitCode = ExitCode.SUCCESS

    @property
    def name(self) -> str:
        return f"{self.command}-{self.config.removesuffix('.yaml')}"


STUDIES: List[Study] = [
    Study("validate", "kdv_converge.yaml"),
    Study("converge", "kdv_converge.yaml"),
    Study("local-error", "kdv_local_error.yaml"),
    Study("commutator-check", "commutator_check.yaml"),
    Study("growth", "growth.yaml"),
    Study("compare", "kdv_compare.yaml"),
    Study("run", "kdv_soliton.yaml"),
    Study("validate", "benney_lin_strict.yaml", ExitCode.VALIDATION_FAILURE),
]


# --------------------------------------------------------------------
# 🏁 Main Execution
# --------------------------------------------------------------------
def run_studies(studies: List[Study]) -> List[str]:
    """Run every study; return the names whose exit code was not the expected one."""
    failures = []
    for study in studies:
        output = file_helper.study_dir(study.name)
        custom_logger.info("🔬 %s on %s -> %s", study.command, study.config, output)
        code = dispatch(
            study.command,
            PathsConfig.CONFIGS_DIR / study.config,
            [f"output.directory={output}"],
        )
        if code != study.expected:
            custom_logger.error(
                "❌ %s exited %d, expected %d", study.name, code, int(study.expected)
            )
            failures.append(study.name)
    return failures


def main() -> int:
    file_helper.ensure_dir(file_helper.reports_dir)
    file_helper.reset_dir(FolderType.REPORTS)
    failures = run_studies(STUDIES)
    if failures:
        custom_logger.error("❌ %d studies failed: %s", len(failures), ", ".join(failures))
        return 1
    custom_logger.info("✅ All %d studies passed; reports in %s", len(STUDIES), file_helper.reports_dir)
    return 0


# --------------------------------------------------------------------
# 🔧 Entry Point
# --------------------------------------------------------------------
if __name__ == "__main__":
    sys.exit(main())
