"""Initialization module for zorder.

This module should be used in any entry point (CLI, Dagster asset, test). It provides basic
initialization by:
1. Loading environment variables
2. Initializing configuration settings
3. Setting up logging
"""

import os

from dotenv import load_dotenv

import zorder.common.zorder.src.config as conf
from zorder.common.zorder.src import zorder_logging as logging


def initialize_zorder(config_files: list[str], show_settings: bool = True, console_level: str | None = None):
    """Initialize zorder with the provided configuration files.

    Steps:
    1. Loads environment variables from .env files
    2. Resolves the environment (default 'dev', '_test' appended under pytest)
    3. Initializes settings from the provided config files
    4. Sets up logging

    Args:
        config_files: List of configuration YAML files to load
        show_settings: Whether to log the loaded settings
        console_level: Optional console log level override (e.g. 'error' for --quiet)
    """
    load_dotenv()

    env = os.getenv(conf.BASE_ENV_VARIABLE, conf.DEFAULT_ENV)

    # Under pytest, "dev" becomes "dev_test" so that tests read their own campaign configuration,
    # while an environment that already names "test" remains the same.
    if "PYTEST_CURRENT_TEST" in os.environ and "test" not in env:
        env = env + "_test"

    os.environ[conf.BASE_ENV_VARIABLE] = env

    configs_str = conf.init_settings(config_files=config_files)
    logging.init_logging(console_level=console_level)

    if show_settings:
        logging.get_zorder_logger(__name__).debug("Loaded settings for environment %s:\n%s", env, configs_str)
