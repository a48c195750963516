"""Workflow assets for the ring_order domain.

The assets in this package run on the moduli configured in
ring_order/resources/config/{ENV}/campaign.yaml:
- VERIFY_REPORT cross-checks theorem-based results against the brute-force oracle
- LATTICE_SCAN records the moduli n for which Z_n is a lattice

SCHEMA_DEFINITION is picked up by zorder.ring_order.definitions.
"""

import dagster as dg

from zorder.common.dagster.util import DagsterSchemaDefinitions

SCHEMA_DEFINITION = DagsterSchemaDefinitions(assets=list(dg.load_assets_from_package_name(__name__)))
