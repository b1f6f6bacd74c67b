import math

import pytest

from davis_lattice.error import ParseError
from davis_lattice.parser import text


class TestLoad:
    def test_full_document(self, yaml_text):
        root = text.load(yaml_text(
            """
            # two generators
            generators: s1 s2 s3
            m s1 s2 = 4   # even
            default = inf
            """
        ), "TEST")

        assert root.bare == {
            "generators": ["s1", "s2", "s3"],
            "default": math.inf,
            "labels": [["s1", "s2", 4]],
        }

    def test_token_locations(self, yaml_text):
        root = text.load(yaml_text(
            """
            generators: a  b
            m a b = 3
            """
        ), "TEST")
        entries = root.entries()
        a, b = entries["generators"][1].value
        s, t, label = entries["labels"][1].value[0].value

        assert str(a.loc) == "TEST:2:13"
        assert str(b.loc) == "TEST:2:16"
        assert (str(s.loc), str(t.loc), str(label.loc)) == ("TEST:3:3", "TEST:3:5", "TEST:3:9")

    @pytest.mark.parametrize("token", ["inf", "Infinity", "INF", "∞"])
    def test_infinite_tokens(self, token):
        root = text.load(f"generators: a\ndefault = {token}\n", "TEST")

        assert root.entries()["default"][1].value == math.inf

    def test_blank_and_comment_lines(self):
        root = text.load("\n# nothing\n   \ngenerators: a\n", "TEST")

        assert root.bare == {"generators": ["a"]}

    @pytest.mark.parametrize(
        "document,message,loc", [
            ("generators: a\nfoo\n", "Malformed line: 'foo'.", "TEST:2:1"),
            ("generators: a\ngenerators: b\n", "Duplicate 'generators' line", "TEST:2:1"),
            ("generators: a b\nm a b = x\n", "Invalid label 'x': expected an integer or inf.", "TEST:2:9"),
            ("generators: a\ndefault = 2\ndefault = 3\n", "Duplicate 'default' line", "TEST:3:1"),
        ],
    )
    def test_errors(self, document, message, loc):
        with pytest.raises(ParseError, match=message.replace(".", r"\.").replace("(", r"\(")) as e:
            text.load(document, "TEST")

        assert str(e.value.loc) == loc
