"""Utility functions for writing JSON output in zorder.

All JSON written by zorder (CLI output, verify reports) goes through dumps(), so key order and
formatting are identical between runs.
"""

import json
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any

import numpy as np

from zorder.common.zorder.src import zorder_logging


def _default(value: Any) -> Any:
    """Convert values that the json module does not know."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        return asdict(value)

    zorder_logging.get_zorder_logger(__name__).warning("Value of type %s is not JSON serializable", type(value))
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps(payload: Any, indent: int | None = 2) -> str:
    """Serialize payload deterministically (insertion ordered keys, numpy scalars as Python numbers)."""
    return json.dumps(payload, indent=indent, default=_default)
