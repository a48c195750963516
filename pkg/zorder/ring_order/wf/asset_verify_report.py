"""VERIFY_REPORT asset.

Runs a VerifyCampaign over the configured range of moduli and writes the JSON report. The asset
fails if any modulus shows a disagreement between theorem-based results and the oracle.
"""

import dagster as dg

from zorder.common.zorder.src.config import settings
from zorder.common.zorder.src.initialization import initialize_zorder
from zorder.common.dagster.util import run_jobs_for_assets
from zorder.ring_order import DOMAIN_NAME, PROJECT_NAME
from zorder.ring_order.src.verify import VerifyCampaign

CONFIG_FILES = [
    "zorder/common/zorder/resources/config/base.yaml",
    "zorder/ring_order/resources/config/{ENV}/campaign.yaml",
]


@dg.asset(
    key_prefix=[PROJECT_NAME, DOMAIN_NAME],
    name="VERIFY_REPORT",
    description="Theorem vs. oracle cross-check over the configured moduli",
    group_name=f"{PROJECT_NAME}_{DOMAIN_NAME}",
)
def asset_verify_report() -> dg.MaterializeResult:
    """Run the verification campaign configured under 'campaign' and write its report.

    Returns:
        dg.MaterializeResult: Counts of moduli, lattices and disagreements plus the report path.

    Raises:
        RuntimeError: If the campaign finds a disagreement.
    """
    initialize_zorder(config_files=CONFIG_FILES)
    cfg = settings["campaign"]
    out = settings["path"] + cfg["out"]

    campaign = VerifyCampaign(lo=cfg["lo"], hi=cfg["hi"], jobs=cfg["jobs"], out=out, fail_on_disagreement=True)
    report = campaign.run()
    summary = report.summary

    return dg.MaterializeResult(
        metadata={
            "Moduli": dg.MetadataValue.int(len(report.per_n)),
            "Lattices": dg.MetadataValue.int(summary["lattices"]),
            "Non-lattices": dg.MetadataValue.int(summary["non_lattices"]),
            "Disagreements": dg.MetadataValue.int(summary["disagreements"]),
            "Report": dg.MetadataValue.path(out),
        },
    )


if __name__ == "__main__":
    run_jobs_for_assets([asset_verify_report])
