"""Settings of zorder, read from YAML files into the global dictionary `settings`.

Entry points (CLI, Dagster assets, tests) call init_settings once with the files they need, given
relative to the project root. `{ENV}` in a file name selects the environment directory
(ZORDER_ENV, default 'dev'), and a value starting with `${VAR}` is replaced by the environment
variable VAR. The first call wins; reset_settings drops everything for the next call.

Library code only needs the resource caps and reads them through get_cap, which falls back to
base.yaml when nothing was initialized.
"""

import functools
import json
import os
import re
import threading
import tomllib
from pathlib import Path
from typing import Any

import yaml

from zorder.common.zorder.src.utils.dict_utils import create_save_dict

BASE_ENV_VARIABLE = "ZORDER_ENV"  # 'dev', 'prod', ... ('_test' is appended under pytest)
BASE_PATH = "ZORDER_PATH"
DEFAULT_ENV = "dev"

# Directory containing pyproject.toml
DEFAULT_PATH = str(Path(__file__).resolve().parents[4]) + os.sep

BASE_CONFIG_FILES = [
    "zorder/common/zorder/resources/config/base.yaml",
]

SECRET_KEYS = ["key", "password", "token", "secret"]

CAP_NAMES = ("modulus", "hasse", "oracle_lattice", "pair_check", "scan", "table")

settings: dict[str, Any] = {}
lock = threading.Lock()

_env_value = re.compile(r"\$\{([^}^{]+)\}")


def _expand_env(loader, node) -> str:  # pylint: disable=unused-argument
    value = node.value
    if (match := _env_value.match(value)) is None:
        raise ValueError(f"Could not expand environment variable in '{value}'")

    if (resolved := os.environ.get(match.group(1))) is None:
        raise RuntimeError(f"Environment variable {match.group(1)} used in configuration is not set")
    return resolved + value[match.end() :]


yaml.add_implicit_resolver("!env", _env_value, None, yaml.SafeLoader)
yaml.add_constructor("!env", _expand_env, yaml.SafeLoader)


def _read_yaml(file: str) -> dict[str, Any]:
    with open(file, mode="r", encoding="utf-8") as f_yaml:
        return yaml.load(f_yaml, Loader=yaml.SafeLoader) or {}


def _project_version(path: str) -> str | None:
    pyproject = Path(path) / "pyproject.toml"
    if not pyproject.is_file():
        return None
    with open(pyproject, "rb") as f_prj:
        return tomllib.load(f_prj)["project"]["version"]


def get_project_path() -> str:
    """ZORDER_PATH (or the repository root), always ending with a path separator."""
    path = os.getenv(BASE_PATH) or DEFAULT_PATH
    return path if path.endswith(os.sep) else path + os.sep


def init_settings(config_files: list[str]) -> str:
    """Load the configuration files into `settings`, unless settings are already loaded.

    Args:
        config_files: YAML files relative to the project root; '{ENV}' is replaced by the environment

    Returns:
        str: The settings as indented JSON with secret-like values masked, for logging

    Raises:
        RuntimeError: If two files define the same top-level key or a ${VAR} is not set
    """
    with lock:
        if not settings:
            env = os.getenv(BASE_ENV_VARIABLE, DEFAULT_ENV)
            path = get_project_path()

            settings["environment"] = env
            settings["path"] = path
            if (version := _project_version(path)) is not None:
                settings["version"] = version

            for file in (c.replace("{ENV}", env) for c in config_files):
                for key, value in _read_yaml(path + file).items():
                    if key in settings:
                        raise RuntimeError(f"Duplicate settings {key} in config {file}.")
                    settings[key] = value

    return json.dumps(create_save_dict(settings, secret_keys=SECRET_KEYS), indent=4)


def reset_settings() -> None:
    """Drop all loaded settings, so the next init_settings call reads the files again."""
    with lock:
        settings.clear()


def get_cap(name: str) -> int:
    """Configured resource cap, one of CAP_NAMES.

    Falls back to base.yaml without touching `settings`, so a later init_settings call still loads
    the full configuration.

    Raises:
        KeyError: If no cap with this name is configured
    """
    caps = settings["caps"] if "caps" in settings else _base_defaults()["caps"]
    return int(caps[name])


@functools.cache
def _base_defaults() -> dict[str, Any]:
    return _read_yaml(get_project_path() + BASE_CONFIG_FILES[0])
