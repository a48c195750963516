"""Logging setup for zorder.

Command results are written to stdout, so every log message goes to stderr. The `zorder` logger
gets a colored console handler whose level follows the settings or the --quiet flag. Both the
`zorder` logger and the root logger (messages from dagster, pandas, ...) can additionally log to a
daily rotating file when a filename is configured in the `logging` section of base.yaml.
"""

import logging
import sys
from logging.handlers import TimedRotatingFileHandler

from zorder.common.zorder.src.config import settings

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)-40s | %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

ROOT_LOGGER_NAME = "zorder"

LOG_COLOR_RED = "\x1b[31;20m"
LOG_COLOR_RESET = "\x1b[0m"

LEVEL_COLORS = {
    logging.DEBUG: "\x1b[32m",
    logging.INFO: "\x1b[38;20m",
    logging.WARNING: "\x1b[33;20m",
    logging.ERROR: LOG_COLOR_RED,
    logging.CRITICAL: "\x1b[31;1m",
}


class ZorderColorFormatter(logging.Formatter):
    """Wraps each record in the color of its level (see LEVEL_COLORS); unknown levels stay plain."""

    def __init__(self):
        super().__init__(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
        self._by_level = {
            level: logging.Formatter(fmt=f"{color}{LOG_FORMAT}{LOG_COLOR_RESET}", datefmt=LOG_DATE_FORMAT)
            for level, color in LEVEL_COLORS.items()
        }

    def format(self, record):
        if (formatter := self._by_level.get(record.levelno)) is None:
            return super().format(record)
        return formatter.format(record)


def _level(name: str) -> int:
    return logging.getLevelNamesMapping()[name.upper()]


def _rotating_file(filename: str, level: str) -> TimedRotatingFileHandler:
    handler = TimedRotatingFileHandler(
        filename=f"{settings.get('path', '')}{filename}", when="midnight", utc=True, backupCount=30, encoding="utf-8"
    )
    handler.setLevel(_level(level))
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
    return handler


def _console_handlers(logger: logging.Logger) -> list[logging.Handler]:
    return [h for h in logger.handlers if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.FileHandler)]


def init_logging(console_level: str | None = None):
    """Install the zorder handlers.

    Only the first call installs handlers; later calls only move the console level, so the CLI can
    apply --quiet after an asset or a test already initialized logging.

    Args:
        console_level: Level name overriding logging.log_zorder_console_level (the CLI passes 'error' for --quiet)
    """
    log_settings = settings.get("logging", {})
    level = _level(console_level or log_settings.get("log_zorder_console_level", "info"))
    logger = logging.getLogger(ROOT_LOGGER_NAME)

    if logger.handlers:
        for handler in _console_handlers(logger):
            handler.setLevel(level)
        return

    if root_file := log_settings.get("log_root_filename"):
        root_handler = _rotating_file(root_file, log_settings.get("log_root_file_level", "info"))
        logging.getLogger().addHandler(root_handler)
        logging.getLogger().setLevel(root_handler.level)

    logger.propagate = False
    logger.setLevel(logging.DEBUG)

    if zorder_file := log_settings.get("log_zorder_filename"):
        logger.addHandler(_rotating_file(zorder_file, log_settings.get("log_zorder_file_level", "debug")))

    console = logging.StreamHandler(stream=sys.stderr)
    console.setLevel(level)
    console.setFormatter(ZorderColorFormatter())
    logger.addHandler(console)


def get_zorder_logger(name: str) -> logging.Logger:
    """Logger below the `zorder` hierarchy.

    Module names outside the package (most often "__main__" when an asset module is run directly)
    are placed below `zorder.default_logger.` so they still reach the zorder handlers.
    """
    if not name.startswith(f"{ROOT_LOGGER_NAME}."):
        name = f"{ROOT_LOGGER_NAME}.default_logger.{name}"
    return logging.getLogger(name)
