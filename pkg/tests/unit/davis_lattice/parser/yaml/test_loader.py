import math

import pytest

from davis_lattice.error import ParseError
from davis_lattice.parser import yaml


class TestLoad:
    @pytest.mark.parametrize(
        "input_string,output", [
            ("s1", "s1"),
            ("4", 4),
            ("inf", math.inf),
            ("NULL", None),
            ("generators: [s1, s2]\n", {"generators": ["s1", "s2"]}),
            ("- [a, b, 3]\n- [b, c, .inf]\n", [["a", "b", 3], ["b", "c", math.inf]]),
        ],
    )
    def test_load_valid_yaml(self, input_string, output):
        assert yaml.load(input_string, "test").bare == output

    def test_locations(self, yaml_ast):
        root = yaml_ast(
            """
            generators: [a, b]
            labels:
              - [a, b, 4]
            """
        )
        entries = root.entries()
        triple = entries["labels"][1].value[0]

        assert str(entries["generators"][1].value[1].loc) == "TEST:2:17"
        assert str(triple.loc) == "TEST:4:5"
        assert str(triple.value[2].loc) == "TEST:4:12"

    def test_invalid_yaml_location(self):
        with pytest.raises(ParseError) as e:
            yaml.load("generators: [a\nlabels: 3\n", "TEST")

        assert str(e.value).startswith("Invalid YAML")
        assert e.value.loc.stream_name == "TEST"
        assert e.value.loc.line >= 1
