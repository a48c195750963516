"""Main entry point for the ring_order domain in Dagster.

This module should be referenced in workspace.yaml to be visible in Dagster. It merges the
definitions of the workflow package into one Dagster Definitions object.
"""

import dagster as dg

from zorder.common.dagster.util import DagsterSchemaDefinitions, create_main_defs
from zorder.ring_order.wf import SCHEMA_DEFINITION as RING_ORDER_DEFS

DEFINITIONS: list[DagsterSchemaDefinitions] = [
    RING_ORDER_DEFS,
]

global_defs: dg.Definitions = create_main_defs(definitions=DEFINITIONS)
