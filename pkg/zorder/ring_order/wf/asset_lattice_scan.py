"""LATTICE_SCAN asset: the moduli n in [campaign.lo, campaign.scan_hi] for which Z_n is a lattice."""

import dagster as dg

from zorder.common.zorder.src import zorder_logging as logging
from zorder.common.zorder.src.config import settings
from zorder.common.zorder.src.initialization import initialize_zorder
from zorder.common.dagster.util import run_jobs_for_assets
from zorder.ring_order import DOMAIN_NAME, PROJECT_NAME
from zorder.ring_order.src.structure import lattice_moduli

CONFIG_FILES = [
    "zorder/common/zorder/resources/config/base.yaml",
    "zorder/ring_order/resources/config/{ENV}/campaign.yaml",
]


@dg.asset(
    key_prefix=[PROJECT_NAME, DOMAIN_NAME],
    name="LATTICE_SCAN",
    description="Moduli whose multiplicative order is a lattice",
    group_name=f"{PROJECT_NAME}_{DOMAIN_NAME}",
)
def asset_lattice_scan() -> dg.MaterializeResult:
    initialize_zorder(config_files=CONFIG_FILES)
    cfg = settings["campaign"]

    lattices = lattice_moduli(cfg["lo"], cfg["scan_hi"])
    logging.get_zorder_logger(__name__).info(
        "%d of %d moduli are lattices", len(lattices), cfg["scan_hi"] - cfg["lo"] + 1
    )

    return dg.MaterializeResult(
        metadata={
            "Lattices": dg.MetadataValue.int(len(lattices)),
            "Moduli": dg.MetadataValue.json({"range": [cfg["lo"], cfg["scan_hi"]], "lattices": lattices}),
        },
    )


if __name__ == "__main__":
    run_jobs_for_assets([asset_lattice_scan])
