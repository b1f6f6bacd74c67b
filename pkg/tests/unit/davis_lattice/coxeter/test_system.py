import math

import pytest

from davis_lattice.coxeter.system import INFINITY, CoxeterSystem, format_label
from davis_lattice.error import ConstructionError
from davis_lattice.parser import parse_system


class TestFromLabels:
    def test_default_fills_unlisted_pairs(self):
        sys = CoxeterSystem.from_labels(["a", "b", "c"], {("a", "b"): 4})

        assert sys.m("a", "b") == 4
        assert sys.m("b", "a") == 4
        assert sys.m("a", "c") == INFINITY
        assert sys.m("c", "c") == 1

    def test_finite_default(self):
        sys = CoxeterSystem.from_labels(["a", "b"], {}, default=2)

        assert sys.finite_pairs() == [("a", "b", 2)]

    def test_unknown_generator(self):
        with pytest.raises(ConstructionError, match="Unknown generator"):
            CoxeterSystem.from_labels(["a"], {("a", "z"): 3})

    def test_diagonal_label(self):
        with pytest.raises(ConstructionError, match="Diagonal"):
            CoxeterSystem.from_labels(["a"], {("a", "a"): 2})


class TestValidation:
    def test_duplicate_generators(self):
        with pytest.raises(ConstructionError, match="Duplicate generators"):
            CoxeterSystem(("a", "a"), ((1, 2), (2, 1)))

    def test_asymmetric(self):
        with pytest.raises(ConstructionError, match="asymmetric"):
            CoxeterSystem(("a", "b"), ((1, 2), (3, 1)))

    @pytest.mark.parametrize("label", [1, 0, 2.5])
    def test_bad_off_diagonal(self, label):
        with pytest.raises(ConstructionError, match="must be an integer >= 2 or inf"):
            CoxeterSystem(("a", "b"), ((1, label), (label, 1)))

    def test_shape(self):
        with pytest.raises(ConstructionError, match="shape"):
            CoxeterSystem(("a", "b"), ((1,),))


class TestAccessors:
    def test_ordered_and_format_type(self, example_system):
        assert example_system.ordered(["s5", "s1", "s1"]) == ("s1", "s5")
        assert example_system.format_type({"s4", "s2"}) == "{s2,s4}"

    def test_unknown_index(self, example_system):
        with pytest.raises(ConstructionError, match="Unknown generator: x"):
            example_system.index("x")

    def test_restrict(self, example_system):
        sub = example_system.restrict(["s4", "s1"])

        assert sub.generators == ("s1", "s4")
        assert sub.m("s1", "s4") == 4

    def test_subsets_key_orders_by_size_first(self, example_system):
        keys = sorted([{"s1", "s4"}, {"s5"}, set(), {"s2"}], key=example_system.subsets_key)

        assert keys == [set(), {"s2"}, {"s5"}, {"s1", "s4"}]

    def test_str(self, coxeter):
        assert str(coxeter("s1 s2", {("s1", "s2"): 4})) == "CoxeterSystem[s1 s2; m(s1,s2)=4]"
        assert str(CoxeterSystem.from_labels(["a", "b"], {})) == "CoxeterSystem[a b; free]"

    @pytest.mark.parametrize("label,text", [(3, "3"), (math.inf, "inf")])
    def test_format_label(self, label, text):
        assert format_label(label) == text


class TestDocument:
    def test_to_document_parses_back(self, example_system):
        assert parse_system(example_system.to_document()) == example_system

    def test_to_document_lists_finite_pairs(self, coxeter):
        sys = coxeter("a b", {("a", "b"): 5})

        assert sys.to_document() == "generators: a b\nm a b = 5\n"
