"""Text renderings of zorder results: DOT and ASCII Hasse diagrams, tables and JSON payloads.

All renderings are byte-stable: nodes are listed in ascending order and edges sorted by
(lower, upper).
"""

from typing import Any

import pandas as pd

from zorder.common.zorder.src.config import settings
from zorder.common.zorder.src.utils.dict_utils import safe_merge_dicts
from zorder.ring_order.src.poset import HasseDiagram

DEFAULT_SCHEMA_VERSION = 1


def with_schema(payload: dict[str, Any]) -> dict[str, Any]:
    """Prefix a JSON payload with its schema_version."""
    version = settings.get("verify", {}).get("schema_version", DEFAULT_SCHEMA_VERSION)
    return safe_merge_dicts({"schema_version": version}, payload)


def hasse_to_dot(diagram: HasseDiagram) -> str:
    """Directed graph with one node per residue and one edge lower -> upper per cover."""
    lines = [f'digraph "Z_{diagram.n}" {{']
    lines += [f"  {a};" for a in range(diagram.n)]
    lines += [f"  {lower} -> {upper};" for lower, upper in diagram.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_ascii(diagram: HasseDiagram) -> str:
    """One line per residue: 'a -> upper covers'."""
    lines = []
    for a in range(diagram.n):
        ups = diagram.upper_covers(a)
        lines.append(f"{a} -> {' '.join(str(u) for u in ups) if ups else '-'}")
    return "\n".join(lines) + "\n"


def hasse_to_payload(diagram: HasseDiagram) -> dict[str, Any]:
    """JSON payload {schema_version, n, nodes, edges} with edges as sorted [lower, upper] pairs."""
    return with_schema(
        {
            "n": diagram.n,
            "nodes": list(range(diagram.n)),
            "edges": [[lower, upper] for lower, upper in diagram.sorted_edges()],
        }
    )


def table(rows: list[dict[str, Any]]) -> str:
    """Plain text table of dict rows (columns in the order of the first row)."""
    if not rows:
        return ""
    return pd.DataFrame(rows).to_string(index=False) + "\n"


def format_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"
