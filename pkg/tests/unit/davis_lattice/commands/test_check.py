from davis_lattice.commands.check import check, check_spherical_orders, halvability_table


class TestCheck:
    def test_two_apex(self, run_config):
        report = check(run_config("check"))

        assert report.passed
        assert report.tables["nerve"] == {
            "generators": 5, "edges": 6, "dimension": 1, "f_vector": [5, 6], "automorphisms": 12,
        }
        assert report.tables["witnesses"]["count"] == 6
        assert len(report.tables["witnesses"]["first"]) == 5
        assert report.tables["witnesses"]["first"][0]["q1"] == 2
        assert "reason" not in report.tables["witnesses"]
        assert [c.name for c in report.checks] == ["spherical orders", "witness conditions"]

    def test_no_witness(self, run_config):
        report = check(run_config("check", catalog="two_apex(3,3)"))

        assert report.tables["witnesses"]["count"] == 0
        assert report.tables["witnesses"]["reason"] == ["Condition (3)"]
        assert report.passed

    def test_system_file(self, run_config, system_file):
        report = check(run_config("check", system_path=system_file))

        assert report.source == str(system_file)
        assert report.tables["witnesses"]["count"] == 6


class TestHalvabilityTable:
    def test_rows(self, example_system):
        rows = halvability_table(example_system)

        assert len(rows) == 11
        pair = next(row for row in rows if row["T"] == "{s1,s4}")
        assert pair["order"] == 8
        assert sorted(pair["halvable_along"]) == ["s1", "s4"]

    def test_odd_pairs_do_not_halve(self, odd_system):
        pair = next(row for row in halvability_table(odd_system) if row["T"] == "{s1,s4}")

        assert pair["order"] == 6
        assert pair["halvable_along"] == []


class TestSphericalOrders:
    def test_orders_agree(self, example_system):
        report = check_spherical_orders(example_system)

        assert report.passed
        assert report.stats == {"spherical_subsets": 12}
