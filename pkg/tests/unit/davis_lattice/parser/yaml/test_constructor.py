import math

import pytest
from yaml.constructor import ConstructorError
from yaml.error import Mark
from yaml.nodes import MappingNode, ScalarNode, SequenceNode

from davis_lattice.parser.yaml.constructor import Constructor
from davis_lattice.parser.yaml.resolver import LABEL_INFINITY_TAG


class TestScalars:
    @pytest.mark.parametrize("value", ["NULL", "Null", "null", "~", ""])
    def test_construct_null(self, value):
        mark = Mark(None, None, 1, 2, None, None)
        res = Constructor("null").construct_yaml_null(ScalarNode(None, value, start_mark=mark))

        assert res.value is None
        assert res.loc.line == 2
        assert res.loc.column == 3
        assert res.loc.stream_name == "null"

    @pytest.mark.parametrize("value,parse", [("2", 2), ("4", 4), ("+12", 12), ("007", 7)])
    def test_construct_int(self, value, parse):
        mark = Mark(None, None, 3, 7, None, None)
        res = Constructor("int").construct_yaml_int(ScalarNode(None, value, start_mark=mark))

        assert res.value == parse
        assert (res.loc.line, res.loc.column) == (4, 8)

    @pytest.mark.parametrize("value", ["inf", ".Inf", "∞"])
    def test_construct_infinity(self, value):
        mark = Mark(None, None, 0, 0, None, None)
        res = Constructor("inf").construct_label_infinity(ScalarNode(LABEL_INFINITY_TAG, value, start_mark=mark))

        assert res.value == math.inf

    def test_construct_str(self):
        mark = Mark(None, None, 5, 1, None, None)
        res = Constructor("str").construct_yaml_str(ScalarNode(None, "s1", start_mark=mark))

        assert res.value == "s1"
        assert str(res.loc) == "str:6:2"


class TestCollections:
    def test_construct_seq(self):
        mark = Mark(None, None, 8, 1, None, None)
        children = [
            ScalarNode("tag:yaml.org,2002:str", "s1", start_mark=mark),
            ScalarNode("tag:yaml.org,2002:int", "3", start_mark=mark),
        ]
        node = SequenceNode(None, children, start_mark=mark)
        res, = Constructor("seq").construct_yaml_seq(node)

        assert res.bare == ["s1", 3]
        assert (res.loc.line, res.loc.column) == (9, 2)

    def test_construct_map(self):
        mark = Mark(None, None, 2, 3, None, None)
        node = MappingNode(None, [
            (ScalarNode("tag:yaml.org,2002:str", "default", start_mark=mark),
             ScalarNode(LABEL_INFINITY_TAG, "inf", start_mark=mark)),
        ], start_mark=mark)
        res, = Constructor("map").construct_yaml_map(node)

        assert res.bare == {"default": math.inf}

    def test_construct_map_duplicate_keys(self):
        mark = Mark(None, None, 0, 0, None, None)
        children = [
            (ScalarNode("tag:yaml.org,2002:str", "generators", start_mark=mark),
             ScalarNode("tag:yaml.org,2002:str", name, start_mark=mark))
            for name in ("a", "b")
        ]
        node = MappingNode(None, children, start_mark=mark)

        with pytest.raises(ConstructorError, match="Duplicate map names: generators"):
            list(Constructor("map").construct_yaml_map(node))

    def test_undefined_tag(self):
        mark = Mark(None, None, 0, 0, None, None)

        with pytest.raises(ConstructorError, match="could not determine a constructor"):
            Constructor.construct_undefined(ScalarNode("tag:example,2024:color", "red", start_mark=mark))
