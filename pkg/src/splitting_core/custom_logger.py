# =============================================================================
# 📝 Auto Module Logger
# =============================================================================
import inspect
import logging
import sys
from typing import Dict, Final

from .constants import RuntimeConfig

# Log message format and timestamp format
LOG_FORMAT: Final[str] = "%(asctime)s | %(levelname)-5s | %(name)-18s | %(message)s"
DATE_FORMAT: Final[str] = "%Y-%m-%d %H:%M:%S"

# One logger per calling module, reused so handlers are attached once
_loggers: Dict[str, logging.Logger] = {}


class _StdoutHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stdout is at emit time."""

    @property
    def stream(self):
        return sys.stdout

    @stream.setter
    def stream(self, value) -> None:
        pass


class AutoLogger:
    """
    Logger proxy that hands out a logger named after the calling module.

    - `subflows.burgers` logs as `burgers`, `schemes.evolve` as `evolve`.
    - Loggers are cached so repeated calls never stack handlers.
    - Level is read from SPLITTING_LOG_LEVEL when a module logs for the first time.

    Example:
        custom_logger.info("📈 Row dt=%g done", dt)
        # 2026-10-19 16:14:02 | INFO  | convergence        | 📈 Row dt=0.0625 done
    """

    def __getattr__(self, attr: str):
        # Direct caller only
        frame = inspect.currentframe()
        caller = frame.f_back if frame is not None else None
        name = caller.f_globals.get("__name__", "root") if caller else "root"
        del frame, caller

        if "." in name:
            name = name.split(".")[-1]

        if name not in _loggers:
            logger = logging.getLogger(name)
            logger.setLevel(RuntimeConfig.log_level())
            logger.propagate = False

            if not logger.handlers:
                handler = _StdoutHandler()
                handler.setFormatter(
                    logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT)
                )
                logger.addHandler(handler)

            _loggers[name] = logger

        return getattr(_loggers[name], attr)


# Import this in any module; it picks the calling module's name automatically
custom_logger = AutoLogger()
