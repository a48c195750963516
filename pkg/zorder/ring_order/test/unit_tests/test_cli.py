"""Testing the click CLI: outputs, JSON payloads and exit codes."""

import json

import pytest
from click.testing import CliRunner

from zorder.common.zorder.src.initialization import initialize_zorder
from zorder.ring_order.cli.main import CONFIG_FILES, main
from zorder.ring_order.src import structure
from zorder.ring_order.src.errors import TheoremViolationError

Z4_DOT = """digraph "Z_4" {
  0;
  1;
  2;
  3;
  0 -> 2;
  2 -> 3;
  3 -> 1;
}
"""


class TestCli:
    """Test suite for the zorder command group."""

    def setup_method(self):
        """Initialize before invoking, so log handlers do not point at the runner's streams."""
        initialize_zorder(config_files=CONFIG_FILES)
        self.runner = CliRunner()  # pylint: disable=attribute-defined-outside-init

    def _run(self, *args: str, code: int = 0):
        result = self.runner.invoke(main, list(args))
        assert result.exit_code == code, result.output
        return result

    def _json(self, *args: str, code: int = 0) -> dict:
        return json.loads(self._run("--format", "json", *args, code=code).stdout)

    def test_hasse_dot(self):
        assert self._run("hasse", "4").stdout == Z4_DOT

    def test_hasse_dot_single_node(self):
        assert self._run("hasse", "1").stdout == 'digraph "Z_1" {\n  0;\n}\n'

    def test_hasse_json(self):
        payload = json.loads(self._run("hasse", "4", "--format", "json").stdout)
        assert payload == {"schema_version": 1, "n": 4, "nodes": [0, 1, 2, 3], "edges": [[0, 2], [2, 3], [3, 1]]}

        edges = json.loads(self._run("hasse", "9", "--format", "json").stdout)["edges"]
        assert len(edges) == 14
        assert {(0, 8), (0, 2), (0, 5), (3, 4), (3, 7), (6, 4), (6, 7)} <= {tuple(e) for e in edges}

    def test_hasse_ascii(self):
        assert self._run("hasse", "4", "--format", "ascii").stdout == "0 -> 2\n1 -> -\n2 -> 3\n3 -> 1\n"

    def test_hasse_cap(self):
        result = self._run("hasse", "50", "--cap", "49", code=3)
        assert "hasse cap exceeded" in result.output

    def test_classify(self):
        payload = self._json("classify", "8")
        assert payload["sets"]["gp"] == [0, 1, 3, 5, 7]
        assert payload["sets"]["n"] == [0, 2, 4, 6]
        assert len(payload["rows"]) == 8

        assert "GP = {0,1,3,5,7}" in self._run("classify", "8").stdout

    def test_classify_single(self):
        payload = self._json("classify", "12", "6")
        assert payload["rows"] == [
            {"a": 6, "is_unit": False, "is_nilpotent": True, "is_projection": False, "is_gp": False}
        ]
        assert "sets" not in payload

        rows = self._json("classify", "1")["rows"]
        assert rows == [{"a": 0, "is_unit": True, "is_nilpotent": True, "is_projection": True, "is_gp": True}]

    def test_classify_cap(self):
        """The full table is refused above caps.table, a single residue is not."""
        result = self._run("classify", str(10**12), code=3)
        assert "table cap exceeded" in result.output
        assert self._json("classify", str(10**12), "1")["rows"][0]["is_unit"]

    def test_lattice(self):
        assert self._run("lattice", "12").stdout == "lattice\n"
        assert self._run("lattice", "2").stdout == "lattice\n"
        assert self._run("lattice", "9", code=1).stdout == "not a lattice; failing ideal (3); witness (3, 6)\n"
        assert self._run("lattice", "12", "--check").stdout == "lattice\noracle agrees: yes\n"
        assert self._run("lattice", "223092870").stdout == "lattice\n"

    def test_lattice_json(self):
        payload = self._json("lattice", "9", "--check", code=1)
        assert payload == {
            "schema_version": 1,
            "n": 9,
            "is_lattice": False,
            "failing_n1": 3,
            "witness": [3, 6],
            "fast_path": True,
            "oracle_agrees": True,
        }

    def test_lattice_oracle_cap(self):
        self._run("lattice", "30", "--check", "--oracle-cap", "20", code=3)

    def test_join_meet(self):
        assert self._run("join", "9", "3", "6", code=1).stdout == "3 v 6 does not exist (coset_smallest, d = 3)\n"
        assert self._run("meet", "9", "4", "7", code=1).stdout.startswith("4 ^ 7 does not exist")
        assert self._run("meet", "12", "7", "9").stdout == "7 ^ 9 = 6 (ideal_largest, d = 2)\n"
        assert self._run("join", "12", "0", "5").stdout == "0 v 5 = 5 (comparable)\n"

    def test_join_json(self):
        payload = self._json("join", "12", "4", "6")
        assert payload == {
            "schema_version": 1,
            "n": 12,
            "a": 4,
            "b": 6,
            "op": "join",
            "exists": True,
            "value": 7,
            "path": "coset_smallest",
            "d": 2,
        }

    @pytest.mark.parametrize("args", [["join", "12", "0", "12"], ["meet", "12", "-1", "3"], ["join", "0", "0", "0"]])
    def test_invalid_input(self, args):
        self._run(*args, code=2)

    def test_projections(self):
        payload = self._json("projections", "12", "8")
        assert (payload["upper_formula"], payload["upper_power"], payload["upper_oracle"]) == (4, 4, 4)
        assert (payload["lower_formula"], payload["lower_oracle"]) == (0, 0)
        assert payload["agree"] is True

        payload = self._json("projections", "12", "5")
        assert (payload["upper_formula"], payload["lower_formula"]) == (1, 9)

        payload = self._json("projections", "12", "9")
        assert (payload["upper_formula"], payload["lower_formula"]) == (9, 9)

    def test_projections_not_gp(self):
        result = self._run("projections", "12", "6", code=2)
        assert "not a generalized projection" in result.output

    def test_theorem_violation(self, monkeypatch):
        def broken(ctx, a):
            raise TheoremViolationError(f"broken for {a}")

        monkeypatch.setattr(structure, "upper_covering_projection", broken)
        self._run("projections", "12", "8", code=4)

    def test_covers(self):
        payload = self._json("covers", "9", "3")
        assert (payload["lower_covers"], payload["upper_covers"]) == ([0], [4, 7])
        assert self._run("covers", "9", "3").stdout == "lower covers: {0} (unique)\nupper covers: {4,7}\n"

    def test_scan(self):
        lattices = [int(line) for line in self._run("scan", "4", "12").stdout.split()]
        assert {4, 8, 12} <= set(lattices)
        assert 9 not in lattices
        assert self._run("scan", "6", "6").stdout == "6\n"
        assert self._json("scan", "1", "2") == {"schema_version": 1, "range": [1, 2], "lattices": [1, 2]}

    def test_verify(self, tmp_path):
        out = tmp_path / "verify.json"
        result = self._run("verify", "1", "12", "--out", str(out))
        assert "lattices=11 non_lattices=1 disagreements=0" in result.stdout

        payload = json.loads(out.read_text(encoding="utf-8"))
        assert len(payload["per_n"]) == 12
        assert all(row["agree"] for row in payload["per_n"])

        payload = self._json("verify", "4", "4")
        assert payload["per_n"][0]["is_lattice_theorem"] is True
        assert payload["summary"] == {"lattices": 1, "non_lattices": 0, "disagreements": 0}

    def test_verify_cap(self):
        self._run("verify", "1", "30", "--oracle-cap", "20", code=3)

    def test_deterministic(self):
        """Identical inputs give identical outputs."""
        for args in (["hasse", "12"], ["--format", "json", "classify", "12"], ["--format", "json", "verify", "1", "10"]):
            assert self._run(*args).stdout == self._run(*args).stdout
