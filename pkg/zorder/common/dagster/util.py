"""Helpers for the Dagster code location of zorder.

Every domain package exports one DagsterSchemaDefinitions from its `wf` package. create_main_defs
folds them into the Definitions object that workspace.yaml points at, and run_jobs_for_assets
materializes single assets in-process when an asset module is run as a script.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field, fields
from typing import Any

import dagster as dg

import zorder.common.zorder.src.zorder_logging as logging


@dataclass(frozen=True)
class DagsterSchemaDefinitions:
    """Definitions contributed by one domain package."""

    assets: list[dg.AssetsDefinition | dg.SourceAsset] = field(default_factory=list)
    schedules: list[dg.ScheduleDefinition] = field(default_factory=list)
    sensors: list[dg.SensorDefinition] = field(default_factory=list)
    jobs: list[dg.JobDefinition | dg.UnresolvedAssetJobDefinition] = field(default_factory=list)
    resources: dict[str, Any] = field(default_factory=dict)

    def merge(self, other: DagsterSchemaDefinitions) -> DagsterSchemaDefinitions:
        """Concatenate the definition lists and union the resources.

        Raises:
            ValueError: If a resource key is bound to different values
        """
        conflicts = [k for k in self.resources.keys() & other.resources.keys() if self.resources[k] != other.resources[k]]
        if conflicts:
            error_msg = f"Can not merge definitions. {sorted(conflicts)} defined with multiple values."
            logging.get_zorder_logger(__name__).error(error_msg)
            raise ValueError(error_msg)

        merged: dict[str, Any] = {
            f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self) if f.name != "resources"
        }
        return DagsterSchemaDefinitions(**merged, resources={**self.resources, **other.resources})


def create_main_defs(definitions: list[DagsterSchemaDefinitions]) -> dg.Definitions:
    """One Definitions object for all domain packages.

    Raises:
        ValueError: If two packages bind the same resource differently
    """
    complete = functools.reduce(DagsterSchemaDefinitions.merge, definitions, DagsterSchemaDefinitions())
    return dg.Definitions(
        assets=complete.assets,
        schedules=complete.schedules,
        sensors=complete.sensors,
        jobs=complete.jobs,
        resources=complete.resources,
    )


def run_jobs_for_assets(assets: list) -> bool:
    """Materialize the assets in an ephemeral instance; True on success."""
    job = dg.define_asset_job(name="local_job", selection=assets)
    result = (
        dg.Definitions(assets=assets, jobs=[job])
        .get_job_def("local_job")
        .execute_in_process(instance=dg.DagsterInstance.ephemeral())
    )

    logger = logging.get_zorder_logger(__name__)
    if result.success:
        logger.info("Local run of %d asset(s) succeeded", len(assets))
    else:
        logger.error("Local run of %d asset(s) failed", len(assets))
    return result.success
