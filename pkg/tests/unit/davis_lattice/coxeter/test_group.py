import numpy as np
import pytest

from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import (
    Subgroup, _CosetTable, coset_labels, coxeter_relators, cyclic_group, enumerate_group, halvable_generators,
    halving, is_homomorphism, semidirect_product, subgroup_cosets
)
from davis_lattice.error import ConstructionError, OrderBoundError


@pytest.fixture
def b3(coxeter):
    return coxeter("a b c", {("a", "b"): 4, ("b", "c"): 3})


class TestEnumerate:
    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_dihedral_order(self, coxeter, m):
        assert enumerate_group(coxeter("a b", {("a", "b"): m}), ["a", "b"]).size == 2 * m

    def test_b3(self, b3):
        group = enumerate_group(b3, b3.generators)

        assert group.size == 48
        assert all(group.order_of(g) == 2 for g in group.gen_images.values())
        assert group.order_of(group.evaluate(("a", "b"))) == 4
        assert group.order_of(group.evaluate(("b", "c"))) == 3

    def test_d4(self, coxeter):
        sys = coxeter("a b c d", {("a", "b"): 3, ("b", "c"): 3, ("b", "d"): 3})

        assert enumerate_group(sys, sys.generators).size == 192

    def test_group_axioms(self, b3):
        group = enumerate_group(b3, ["a", "b"])
        mult = group.mult

        assert (mult[0] == np.arange(group.size)).all()
        assert (mult[np.arange(group.size), group.inv] == 0).all()
        assert (mult[mult[:, 3], :] == mult[:, mult[3, :]]).all()

    def test_words_evaluate_to_elements(self, b3):
        group = enumerate_group(b3, b3.generators)

        assert [group.evaluate(group.word(g)) for g in range(group.size)] == list(range(group.size))

    def test_trivial(self, example_system):
        group = enumerate_group(example_system, [])

        assert group.size == 1
        assert group.word(0) == ()

    def test_not_spherical(self, example_system):
        with pytest.raises(ConstructionError, match="not spherical"):
            enumerate_group(example_system, ["s1", "s2"])

    def test_order_bound(self, b3):
        with pytest.raises(OrderBoundError):
            enumerate_group(b3, b3.generators, Bounds(max_group_order=47))

    def test_full_table_is_compacted(self, coxeter):
        sys = coxeter("a b c d", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3})
        relators = coxeter_relators(sys, sys.generators)
        unbounded = _CosetTable(4, relators, 10 ** 7)
        unbounded.run()
        assert len(unbounded.table) > 1152

        tight = _CosetTable(4, relators, len(unbounded.table) - 1)
        tight.run()

        assert tight.regular_action(sys.generators).size == 1152
        assert len(tight.table) < len(unbounded.table)

    def test_compact_renumbers_live_cosets(self):
        table = _CosetTable(1, [(0, 0)], 10)
        table.table = [[2], [-1], [0]]
        table.parent = [0, 0, 2]

        assert table._compact(2) == 1
        assert table.table == [[1], [0]]
        assert table.parent == [0, 1]


class TestHalving:
    @pytest.mark.parametrize("m", [2, 4, 6, 8])
    def test_even_dihedral(self, coxeter, m):
        half = halving(coxeter("a b", {("a", "b"): m}), ["a", "b"], "a")

        assert half.order == m
        assert half.index_in_parent == 2
        assert half.is_closed()

    @pytest.mark.parametrize("m", [3, 5, 7])
    def test_odd_dihedral(self, coxeter, m):
        assert halving(coxeter("a b", {("a", "b"): m}), ["a", "b"], "a") is None

    def test_single_generator(self, coxeter):
        half = halving(coxeter("a b", {}), ["a"], "a")

        assert half.order == 1

    def test_b3_only_at_short_end(self, b3):
        assert halvable_generators(b3, b3.generators) == ["a"]
        assert halving(b3, b3.generators, "a").order == 24

    def test_a3_not_halvable(self, coxeter):
        sys = coxeter("a b c", {("a", "b"): 3, ("b", "c"): 3})

        assert halvable_generators(sys, sys.generators) == []

    def test_generator_outside_subset(self, b3):
        with pytest.raises(ConstructionError, match="does not belong"):
            halving(b3, ["a", "b"], "c")


class TestSubgroups:
    def test_as_table_embeds(self, coxeter):
        group = enumerate_group(coxeter("a b", {("a", "b"): 4}), ["a", "b"])
        half = halving(coxeter("a b", {("a", "b"): 4}), ["a", "b"], "a")
        table, embedding = half.as_table("Half")

        assert table.size == 4
        assert is_homomorphism(table, group, embedding)
        assert len(set(embedding.tolist())) == 4

    def test_not_closed(self, coxeter):
        group = enumerate_group(coxeter("a b", {("a", "b"): 3}), ["a", "b"])

        assert not Subgroup(group, [0, group.gen_images["a"], group.gen_images["b"]]).is_closed()

    def test_cosets_partition(self, coxeter):
        group = enumerate_group(coxeter("a b", {("a", "b"): 3}), ["a", "b"])
        sub = Subgroup(group, group.closure([group.gen_images["a"]]))
        cosets = subgroup_cosets(group, sub)
        labels, count = coset_labels(group, sub.member_indices)

        assert len(cosets) == count == 3
        assert cosets[0] == list(sub.member_indices)
        assert sorted(g for c in cosets for g in c) == list(range(6))
        assert all(len({int(labels[g]) for g in c}) == 1 for c in cosets)


class TestConstructions:
    def test_cyclic(self):
        group = cyclic_group(5)

        assert group.size == 5
        assert group.order_of(group.gen_images["a"]) == 5
        assert group.inverse(2) == 3

    def test_semidirect_product_with_inversion(self):
        rotations = cyclic_group(4)
        flip = cyclic_group(2)
        action = np.array([np.arange(4), (-np.arange(4)) % 4])
        group = semidirect_product(rotations, flip, action, "D4")

        assert group.size == 8
        r, f = 1 * 2, 0 * 2 + 1
        assert group.multiply(group.multiply(f, r), f) == group.inverse(r)
        assert group.order_of(r) == 4
