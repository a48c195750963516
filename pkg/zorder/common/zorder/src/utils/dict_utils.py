"""Dictionary helpers for zorder."""

from typing import Any


def create_save_dict(d: dict, secret_keys: list[str], secret_value: str = "--SECRET--") -> dict:
    """Copy of d that can be logged: values of keys containing a secret_keys substring are masked.

    Matching is case-insensitive; nested dictionaries are masked recursively.
    """
    return {
        key: (
            create_save_dict(value, secret_keys, secret_value)
            if isinstance(value, dict)
            else secret_value if any(s in str(key).lower() for s in secret_keys) else value
        )
        for key, value in d.items()
    }


def safe_merge_dicts(first: dict[str, Any] | None, second: dict[str, Any] | None) -> dict[str, Any]:
    """New dictionary with the keys of first followed by the new keys of second.

    Raises:
        RuntimeError: If a key is present in both with different values
    """
    result = dict(first or {})
    for key, value in (second or {}).items():
        if key in result and result[key] != value:
            raise RuntimeError(f"Cannot merge dictionaries: Conflicting values for key '{key}'")
        result.setdefault(key, value)
    return result
