# =============================================================================
# 🧰 File & folder helper
# =============================================================================
from __future__ import annotations

import errno
import shutil
from dataclasses import dataclass
from pathlib import Path

from splitting_core import FolderType, PathsConfig, custom_logger


# =============================================================================
# 🧩 FileHelper Class
# =============================================================================
@dataclass
class FileHelper:
    """Singleton utility for safe file/folder operations and I/O."""

    outputs_dir: Path = PathsConfig.OUTPUT_DIR
    reports_dir: Path = PathsConfig.REPORTS_DIR

    _instance: FileHelper | None = None

    # ------------------------------------------------------------------------
    # Singleton Instantiation
    # ------------------------------------------------------------------------
    def __new__(cls) -> FileHelper:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    # ------------------------------------------------------------------------
    # Directory Operations
    # ------------------------------------------------------------------------
    @staticmethod
    def ensure_dir(path: Path) -> Path:
        """Ensure a directory exists; create it if missing."""
        try:
            path.mkdir(parents=True, exist_ok=True)
        except PermissionError as e:
            custom_logger.error(
                "❌ Permission denied creating directory %s: %s", path, e
            )
            raise
        except OSError as e:
            if e.errno != errno.EEXIST:
                custom_logger.error("❌ OS error creating directory %s: %s", path, e)
                raise
        return path

    def reset_dir(self, folder: FolderType | Path) -> None:
        """Delete all files and subfolders in the given folder."""
        path = folder if isinstance(folder, Path) else self.get_folder(folder)
        if not path.exists():
            custom_logger.warning("⚠️ Folder does not exist: %s", path)
            return

        for entry in path.iterdir():
            try:
                if entry.is_file():
                    entry.unlink()
                    custom_logger.debug("🗑️ Deleted file: %s", entry)
                elif entry.is_dir():
                    shutil.rmtree(entry)
                    custom_logger.debug("🗑️ Deleted folder: %s", entry)
            except OSError as e:
                custom_logger.error("❌ OS error deleting %s: %s", entry, e)
                raise

    def get_folder(self, folder: FolderType) -> Path:
        """Map a FolderType to its configured path."""
        mapping = {
            FolderType.OUTPUTS: self.outputs_dir,
            FolderType.REPORTS: self.reports_dir,
        }
        try:
            return mapping[FolderType(folder)]
        except (KeyError, ValueError) as e:
            custom_logger.error("❌ Invalid folder type: %s", folder)
            raise ValueError(f"Unsupported folder type: {folder}") from e

    # ------------------------------------------------------------------------
    # Safe File I/O
    # ------------------------------------------------------------------------
    def safe_write(self, file_path: Path, content: str, mode: str = "w") -> Path:
        """Write text, creating parent directories; newlines are always '\\n'."""
        self.ensure_dir(file_path.parent)
        try:
            with file_path.open(mode, encoding="utf-8", newline="\n") as f:
                f.write(content)
            custom_logger.info("✅ Written to file: %s", file_path)
        except OSError as e:
            custom_logger.error("❌ Failed writing to %s: %s", file_path, e)
            raise
        return file_path

    def study_dir(self, name: str, folder: FolderType = FolderType.REPORTS) -> Path:
        """Per-study subfolder of outputs/ or reports/, created on demand."""
        if not name or Path(name).name != name:
            raise ValueError(f"Study name must be a single path component, got {name!r}")
        return self.ensure_dir(self.get_folder(folder) / name)


# =============================================================================
# 🌟 Global Singleton Instance
# =============================================================================
file_helper = FileHelper()
