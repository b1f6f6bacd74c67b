import pytest

from davis_lattice.commands.build import build
from davis_lattice.error import ConstructionError


class TestBuild:
    def test_single_chamber(self, run_config):
        report = build(run_config("build", catalog="two_apex(3,3)"))

        assert report.passed
        assert "witness" not in report.tables
        assert report.tables["chambers"] == {
            "total": 1, "levels": {1: 1}, "vertices": 12, "edges": 23, "interior_mirrors": 0,
        }
        assert report.tables["dual_graph"] == []
        assert [c.name for c in report.checks] == ["chamber complex", "complex of groups G(Y_1)"]

    def test_level_two(self, run_config):
        report = build(run_config("build", n=2))

        assert report.passed
        assert report.params == {"n": 2, "witness": 0}
        assert report.tables["chambers"] == {
            "total": 3, "levels": {1: 2, 2: 1}, "vertices": 30, "edges": 65, "interior_mirrors": 2,
        }
        assert report.tables["dual_graph"] == [
            {"lower": "1/0", "upper": "2/", "mirror": "s1"},
            {"lower": "1/1", "upper": "2/", "mirror": "s3"},
        ]

    def test_dot_export(self, run_config, tmp_path):
        dot = tmp_path / "y3.dot"
        report = build(run_config("build", n=3), dot)

        assert report.params["dot"] == str(dot)
        assert dot.read_text(encoding="utf-8").startswith('graph "Y_3" {')

    def test_no_witness(self, run_config):
        with pytest.raises(ConstructionError, match="Not a witness system: Condition \\(3\\)"):
            build(run_config("build", catalog="two_apex(3,3)", n=2))

    def test_witness_out_of_range(self, run_config):
        with pytest.raises(ConstructionError, match="Witness index 9 out of range, found 6"):
            build(run_config("build", n=2, witness=9))
