"""Testing dict_utils module."""

import pytest

from zorder.common.zorder.src.utils.dict_utils import create_save_dict, safe_merge_dicts


def test_create_save_dict_simple():
    """Test create_save_dict for a simple dict."""
    simple_dict = {"modulus": 12, "token": "abc", "caps": 3}

    save_dict = create_save_dict(simple_dict, secret_keys=["token"])

    assert save_dict == {"modulus": 12, "token": "--SECRET--", "caps": 3}


def test_create_save_dict_nested():
    """Test create_save_dict for nested settings; matching is by substring and case-insensitive."""
    settings = {
        "caps": {"hasse": 5000},
        "remote": {"Api_Key": "DANGER", "host": "OK"},
    }

    save_dict = create_save_dict(settings, secret_keys=["key"])

    assert save_dict["caps"]["hasse"] == 5000
    assert save_dict["remote"]["Api_Key"] == "--SECRET--"
    assert save_dict["remote"]["host"] == "OK"
    assert settings["remote"]["Api_Key"] == "DANGER"  # input is not modified


def test_safe_merge_dicts():
    """Disjoint keys and equal values merge, conflicting values raise."""
    assert safe_merge_dicts({"schema_version": 1}, {"n": 9}) == {"schema_version": 1, "n": 9}
    assert safe_merge_dicts({"n": 9}, {"n": 9}) == {"n": 9}
    assert safe_merge_dicts(None, {"n": 9}) == {"n": 9}
    assert safe_merge_dicts({"n": 9}, None) == {"n": 9}

    with pytest.raises(RuntimeError):
        safe_merge_dicts({"n": 9}, {"n": 12})


def test_safe_merge_dicts_keeps_order():
    """Keys of the first dict come first (schema_version leads every JSON payload)."""
    merged = safe_merge_dicts({"schema_version": 1}, {"n": 4, "edges": []})
    assert list(merged) == ["schema_version", "n", "edges"]
