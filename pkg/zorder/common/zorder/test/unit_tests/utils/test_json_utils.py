"""Testing json_utils module."""

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pytest

from zorder.common.zorder.src.utils.json_utils import dumps


class _Color(Enum):
    RED = "red"


@dataclass(frozen=True)
class _Pair:
    a: int
    b: int


def test_dumps_numpy_values():
    """numpy scalars and arrays are written as plain numbers and lists."""
    payload = {"n": np.int64(12), "flag": np.bool_(True), "row": np.array([0, 2, -1])}

    assert json.loads(dumps(payload)) == {"n": 12, "flag": True, "row": [0, 2, -1]}


def test_dumps_sets_enums_dataclasses():
    """Sets are sorted, enums give their value and dataclasses become objects."""
    payload = {"gp": frozenset({7, 0, 3}), "path": _Color.RED, "pair": _Pair(3, 6)}

    assert json.loads(dumps(payload)) == {"gp": [0, 3, 7], "path": "red", "pair": {"a": 3, "b": 6}}


def test_dumps_is_deterministic():
    """Key order follows insertion order and the output is identical between calls."""
    payload = {"schema_version": 1, "n": 4, "edges": [[0, 2], [2, 3], [3, 1]]}

    assert dumps(payload) == dumps(dict(payload))
    assert dumps(payload).index("schema_version") < dumps(payload).index("edges")


def test_dumps_unknown_type():
    """Unknown types raise TypeError."""
    with pytest.raises(TypeError):
        dumps({"x": object()})
