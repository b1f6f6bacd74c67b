from davis_lattice.commands.catalog_list import catalog_report


class TestCatalogReport:
    def test_entries(self):
        report = catalog_report()
        names = [row["name"] for row in report.tables["catalog"]]

        assert report.command == "catalog-list"
        assert "two_apex" in names
        assert "petersen" in names
        assert report.passed

    def test_yaml(self):
        rendered = catalog_report().render("yaml")

        assert rendered.startswith("schema: 1\n")
        assert "name: two_apex" in rendered
