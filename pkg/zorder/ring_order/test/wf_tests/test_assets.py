"""Materializing the ring_order assets in-process with the dev_test campaign configuration."""

import json
import os

import dagster as dg

import zorder.common.zorder.src.config as conf
from zorder.common.zorder.src.initialization import initialize_zorder
from zorder.ring_order.definitions import global_defs
from zorder.ring_order.src.structure import lattice_moduli
from zorder.ring_order.wf.asset_lattice_scan import asset_lattice_scan
from zorder.ring_order.wf.asset_verify_report import CONFIG_FILES, asset_verify_report


def _metadata(result: dg.ExecuteInProcessResult) -> dict:
    events = result.get_asset_materialization_events()
    assert len(events) == 1
    return events[0].step_materialization_data.materialization.metadata


class TestAssets:
    """Test suite for VERIFY_REPORT and LATTICE_SCAN."""

    def setup_method(self):
        """Load base.yaml together with the campaign configuration."""
        conf.reset_settings()
        initialize_zorder(config_files=CONFIG_FILES)

    def test_definitions(self):
        """Both assets are part of the code location under ZORDER/RING_ORDER."""
        assert asset_verify_report.key == dg.AssetKey(["ZORDER", "RING_ORDER", "VERIFY_REPORT"])
        assert asset_lattice_scan.key == dg.AssetKey(["ZORDER", "RING_ORDER", "LATTICE_SCAN"])
        assert global_defs.get_assets_def(asset_verify_report.key).key == asset_verify_report.key
        assert global_defs.get_assets_def(asset_lattice_scan.key).key == asset_lattice_scan.key

    def test_verify_report(self, tmp_path, monkeypatch):
        monkeypatch.setitem(conf.settings, "path", str(tmp_path) + os.sep)
        cfg = conf.settings["campaign"]

        result = dg.materialize([asset_verify_report])

        assert result.success
        metadata = _metadata(result)
        assert metadata["Moduli"].value == cfg["hi"] - cfg["lo"] + 1
        assert metadata["Disagreements"].value == 0

        payload = json.loads((tmp_path / cfg["out"]).read_text(encoding="utf-8"))
        assert payload["summary"]["disagreements"] == 0

    def test_lattice_scan(self):
        cfg = conf.settings["campaign"]

        result = dg.materialize([asset_lattice_scan])

        assert result.success
        metadata = _metadata(result)
        lattices = lattice_moduli(cfg["lo"], cfg["scan_hi"])
        assert metadata["Lattices"].value == len(lattices)
        assert metadata["Moduli"].value["lattices"] == lattices
