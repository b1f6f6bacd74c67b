import pytest
from yaml.nodes import MappingNode, ScalarNode, SequenceNode

from davis_lattice.parser.yaml.resolver import LABEL_INFINITY_TAG, Resolver


class TestResolve:
    @pytest.mark.parametrize("value", ["NULL", "Null", "null", "~", ""])
    def test_resolve_null(self, value):
        assert Resolver().resolve(ScalarNode, value, (True, True)) == "tag:yaml.org,2002:null"

    @pytest.mark.parametrize("value", ["1", "0", "4", "-100", "+100", "00005"])
    def test_resolve_int(self, value):
        assert Resolver().resolve(ScalarNode, value, (True, True)) == "tag:yaml.org,2002:int"

    @pytest.mark.parametrize("value", ["inf", "Inf", "INF", "infinity", "Infinity", ".inf", ".Inf", ".INF", "∞"])
    def test_resolve_infinity(self, value):
        assert Resolver().resolve(ScalarNode, value, (True, True)) == LABEL_INFINITY_TAG

    @pytest.mark.parametrize(
        "value", ["s1", "true", "False", "1.5", "0x10", "-inf", "info", "nan", " ", "1 2"],
    )
    def test_resolve_str(self, value):
        assert Resolver().resolve(ScalarNode, value, (True, True)) == "tag:yaml.org,2002:str"

    def test_quoted_scalar_is_str(self):
        assert Resolver().resolve(ScalarNode, "4", (False, True)) == "tag:yaml.org,2002:str"

    @pytest.mark.parametrize("value", ["123", "inf", "test"])
    def test_resolve_collections(self, value):
        assert Resolver().resolve(SequenceNode, value, (True, True)) == "tag:yaml.org,2002:seq"
        assert Resolver().resolve(MappingNode, value, (True, True)) == "tag:yaml.org,2002:map"
