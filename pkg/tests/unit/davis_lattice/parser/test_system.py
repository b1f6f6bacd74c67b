import math

import pytest

from davis_lattice.error import ParseError
from davis_lattice.parser import load_system, parse_system


class TestParseSystem:
    def test_text(self, system_text):
        sys = system_text(
            """
            generators: s1 s2 s3
            m s1 s2 = 4
            """
        )

        assert sys.generators == ("s1", "s2", "s3")
        assert sys.m("s1", "s2") == 4
        assert sys.m("s2", "s3") == math.inf

    def test_yaml(self, system_text):
        sys = system_text(
            """
            generators: [s1, s2, s3]
            default: 2
            labels:
              - [s1, s2, 4]
              - [s2, s3, inf]
            """,
            syntax="yaml",
        )

        assert sys.m("s1", "s2") == 4
        assert sys.m("s1", "s3") == 2
        assert sys.m("s2", "s3") == math.inf

    def test_both_syntaxes_agree(self, system_text):
        from_text = system_text("generators: a b c\nm a b = 3\nm b c = 6\n")
        from_yaml = system_text("generators: [a, b, c]\nlabels: [[a, b, 3], [c, b, 6]]\n", syntax="yaml")

        assert from_text == from_yaml

    def test_symmetric_repeat_is_accepted(self, system_text):
        sys = system_text("generators: a b\nm a b = 3\nm b a = 3\n")

        assert sys.m("a", "b") == 3

    def test_diagonal_one_is_accepted(self, system_text):
        assert system_text("generators: a b\nm a a = 1\n").m("a", "a") == 1

    def test_unknown_syntax(self):
        with pytest.raises(ParseError, match="Unsupported document syntax: xml"):
            parse_system("generators: a", syntax="xml")


class TestValidation:
    @pytest.mark.parametrize(
        "document,message,loc", [
            ("m s1 s2 = 3\n", "Missing generators.", "TEST:1:1"),
            ("generators:\n", "Expected non-empty list of generators.", "TEST:1:1"),
            ("generators: a a\n", "Duplicate generator 'a', first declared at TEST:1:13.", "TEST:1:15"),
            ("generators: s1 s2\nm s1 s9 = 3\n", "Unknown generator 's9'.", "TEST:2:6"),
            ("generators: s1 s2\nm s1 s1 = 2\n", "Diagonal label for 's1' must be 1.", "TEST:2:11"),
            ("generators: s1 s2\nm s1 s2 = 1\n", "Off-diagonal label must be at least 2, got 1.", "TEST:2:11"),
            ("generators: a b\ndefault = 1\n", "Off-diagonal label must be at least 2, got 1.", "TEST:2:11"),
            ("generators: a b\nm a b = 3\nm a b = 3\n", "Duplicate label for (a, b), first given at TEST:2:1.",
             "TEST:3:1"),
            ("generators: a b\nm a b = 3\nm b a = 4\n", "Label matrix is asymmetric: m(a,b) = 3 but m(b,a) = 4.",
             "TEST:3:9"),
        ],
    )
    def test_text_errors(self, system_text, document, message, loc):
        with pytest.raises(ParseError) as e:
            system_text(document)

        assert str(e.value) == f"[SystemDocument] {message}"
        assert str(e.value.loc) == loc

    @pytest.mark.parametrize(
        "document,message", [
            ("- a\n- b\n", "Top level structure should be a map."),
            ("generators: [a]\ncolors: 3\n", "Unknown key 'colors'. Available: generators, default, labels."),
            ("generators: a\n", "Expected non-empty list of generators."),
            ("generators: [a, 3]\n", "Generator names must be strings."),
            ("generators: [a, b]\nlabels: [[a, b]]\n", "Expected label triple [s, t, m]."),
            ("generators: [a, b]\nlabels: {a: b}\n", "Expected list of labels."),
            ("generators: [a, b]\nlabels: [[a, b, x]]\n", "Expected integer or inf label."),
        ],
    )
    def test_yaml_errors(self, system_text, document, message):
        with pytest.raises(ParseError) as e:
            system_text(document, syntax="yaml")

        assert str(e.value) == f"[SystemDocument] {message}"

    def test_invalid_yaml(self, system_text):
        with pytest.raises(ParseError, match="Invalid YAML") as e:
            system_text("generators: [a, b\n", syntax="yaml")

        assert e.value.loc.stream_name == "TEST"

    def test_duplicate_yaml_keys(self, system_text):
        with pytest.raises(ParseError, match="Duplicate map names: generators") as e:
            system_text("generators: [a]\ngenerators: [b]\n", syntax="yaml")

        assert e.value.loc.line == 1


class TestLoadSystem:
    def test_suffix_selects_syntax(self, tmp_path):
        (tmp_path / "sys.yaml").write_text("generators: [a, b]\nlabels: [[a, b, 4]]\n")
        (tmp_path / "sys.txt").write_text("generators: a b\nm a b = 4\n")

        assert load_system(tmp_path / "sys.yaml") == load_system(tmp_path / "sys.txt")

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="Cannot read system document") as e:
            load_system(tmp_path / "missing.txt")

        assert e.value.loc.stream_name == str(tmp_path / "missing.txt")
