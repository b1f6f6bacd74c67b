import pytest

from davis_lattice.coxeter.spherical import coxeter_diagram, is_spherical, spherical_order, spherical_subsets


@pytest.fixture
def finite_types(coxeter):
    return {
        "A3": coxeter("a b c", {("a", "b"): 3, ("b", "c"): 3}),
        "B3": coxeter("a b c", {("a", "b"): 4, ("b", "c"): 3}),
        "D4": coxeter("a b c d", {("a", "b"): 3, ("b", "c"): 3, ("b", "d"): 3}),
        "H3": coxeter("a b c", {("a", "b"): 5, ("b", "c"): 3}),
        "F4": coxeter("a b c d", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3}),
        "E6": coxeter("a b c d e f", {("a", "b"): 3, ("b", "c"): 3, ("c", "d"): 3, ("d", "e"): 3, ("c", "f"): 3}),
    }


class TestClassification:
    @pytest.mark.parametrize(
        "name,order", [("A3", 24), ("B3", 48), ("D4", 192), ("H3", 120), ("F4", 1152), ("E6", 51840)],
    )
    def test_irreducible(self, finite_types, name, order):
        subset = is_spherical(finite_types[name], finite_types[name].generators)

        assert subset.type_name == name
        assert spherical_order(subset) == order

    @pytest.mark.parametrize("m", [3, 4, 6, 12])
    def test_dihedral(self, coxeter, m):
        subset = is_spherical(coxeter("a b", {("a", "b"): m}), ["a", "b"])

        assert subset.type_name == f"I2({m})"
        assert spherical_order(subset) == 2 * m

    def test_reducible(self, coxeter):
        sys = coxeter("a b c", {("a", "b"): 4})
        subset = is_spherical(sys, ["c", "b", "a"])

        assert subset.type_name == "I2(4) x A1"
        assert spherical_order(subset) == 16

    def test_commuting_pair(self, coxeter):
        assert is_spherical(coxeter("a b", {}), ["a", "b"]).type_name == "A1 x A1"

    def test_empty(self, example_system):
        subset = is_spherical(example_system, [])

        assert subset.type_name == "trivial"
        assert spherical_order(subset) == 1

    @pytest.mark.parametrize(
        "labels", [
            {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3},
            {("a", "b"): 4, ("b", "c"): 4},
            {("a", "b"): 6, ("b", "c"): 3},
            {("a", "b"): 5, ("b", "c"): 5},
        ],
    )
    def test_affine_and_hyperbolic(self, coxeter, labels):
        assert is_spherical(coxeter("a b c", labels), ["a", "b", "c"]) is None

    def test_infinite_pair(self, example_system):
        assert is_spherical(example_system, ["s1", "s2"]) is None


class TestDiagram:
    def test_edges_skip_commuting_pairs(self, coxeter):
        graph = coxeter_diagram(coxeter("a b c", {("a", "b"): 4}), ["a", "b", "c"])

        assert sorted(graph.nodes) == ["a", "b", "c"]
        assert [(u, v, d["label"]) for u, v, d in graph.edges(data=True)] == [("a", "b", 4)]


class TestSphericalSubsets:
    def test_two_apex(self, example_system):
        subsets = spherical_subsets(example_system)

        assert len(subsets) == 12
        assert subsets[0].members == ()
        assert [len(s) for s in subsets] == [0] + [1] * 5 + [2] * 6
        assert ("s1", "s4") in [s.members for s in subsets]
        assert ("s4", "s5") not in [s.members for s in subsets]

    def test_all_commuting(self, coxeter):
        subsets = spherical_subsets(coxeter("a b c", {}))

        assert len(subsets) == 8
        assert spherical_order(subsets[-1]) == 8
