import pytest

from davis_lattice.cog.complex import has_trivial_type0_groups, validate_cog
from davis_lattice.cog.morphism import validate_covering, validate_morphism
from davis_lattice.davis.chamber import ChamberId, build_Yn
from davis_lattice.davis.complexes import (
    CONJUGATION, INCLUSION, build_covering_to_GY1, build_GY1, build_GYn, edge_info, local_group,
)
from davis_lattice.error import ConstructionError
from davis_lattice.nerve.catalog import petersen
from davis_lattice.nerve.witness import find_witnesses


class TestLocalGroup:
    def test_full_special_subgroup(self, example_system):
        group = local_group(example_system, ("s1", "s4"))

        assert group.table.size == 8
        assert group.halved is None
        assert str(group) == "W_{s1,s4}"
        assert list(group.lookup) == list(range(8))

    def test_halved(self, example_system):
        group = local_group(example_system, ("s1", "s4"), "s1")

        assert group.table.size == 4
        assert group.ambient.size == 8
        assert str(group) == "Half_s1(W_{s1,s4})"
        assert (group.lookup >= 0).sum() == 4

    def test_halving_a_single_generator(self, example_system):
        assert local_group(example_system, ("s2",), "s2").table.size == 1

    def test_odd_label_not_halvable(self, odd_system):
        with pytest.raises(ConstructionError, match="not halvable"):
            local_group(odd_system, ("s1", "s4"), "s1")


class TestGY1:
    def test_valid(self, example_system):
        gy1 = build_GY1(example_system)

        assert gy1.name == "G(Y_1)"
        assert validate_cog(gy1).passed
        assert has_trivial_type0_groups(gy1)
        assert sorted(gy1.local_orders()) == [1] + [2] * 5 + [8] * 6

    def test_only_inclusions(self, example_system):
        assert {info.kind for info in build_GY1(example_system).edge_info} == {INCLUSION}


class TestGYn:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_valid(self, example_system, example_witness, n):
        gyn = build_GYn(example_witness, example_system, n)

        assert gyn.name == f"G(Y_{n})"
        assert validate_cog(gyn).passed
        assert has_trivial_type0_groups(gyn)

    @pytest.mark.parametrize("n,count", [(1, 0), (2, 10), (3, 30)])
    def test_conjugation_edges(self, example_system, example_witness, n, count):
        gyn = build_GYn(example_witness, example_system, n)

        assert sum(info.kind == CONJUGATION for info in gyn.edge_info) == count

    def test_edge_kinds_at_interior_mirror(self, example_system, example_witness):
        y = build_Yn(example_witness, example_system, 2)
        lower, upper = ChamberId(1, (0,)), ChamberId(2)
        shared = y.vertex(lower, ["s1", "s4"])
        from_lower = y.scwol.edge_index[(y.vertex(lower, ["s4"]), shared)]
        from_upper = y.scwol.edge_index[(y.vertex(upper, ["s4"]), shared)]
        from_mirror = y.scwol.edge_index[(y.vertex(lower, ["s1"]), shared)]

        assert edge_info(y, from_lower).kind == CONJUGATION
        assert edge_info(y, from_lower).mirror == "s1"
        assert edge_info(y, from_upper).kind == INCLUSION
        assert edge_info(y, from_mirror).kind == INCLUSION
        assert edge_info(y, from_mirror).mirror == "s1"

    def test_shared_vertices_carry_halves(self, example_system, example_witness):
        y = build_Yn(example_witness, example_system, 2)
        gyn = build_GYn(example_witness, example_system, 2, y=y)
        v = y.vertex(ChamberId(1, (1,)), ["s3", "s5"])

        assert y.vertices[v].is_shared
        assert gyn.local[v].size == 4

    def test_not_a_witness(self, example_witness, odd_system):
        with pytest.raises(ConstructionError, match="Not a witness"):
            build_GYn(example_witness, odd_system, 2)

    def test_forced_without_halving(self, example_witness, odd_system):
        with pytest.raises(ConstructionError, match="not halvable"):
            build_GYn(example_witness, odd_system, 2, force=True)


class TestCovering:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_covering(self, example_system, example_witness, n):
        report = validate_covering(build_covering_to_GY1(example_witness, example_system, n))

        assert report.name == "covering"
        assert report.passed

    @pytest.mark.parametrize("n", [2, 3])
    def test_petersen(self, n):
        sys = petersen(4)
        wit = find_witnesses(sys, limit=1)[0]

        assert validate_covering(build_covering_to_GY1(wit, sys, n)).passed

    def test_vertex_map_forgets_chambers(self, example_system, example_witness):
        y = build_Yn(example_witness, example_system, 2)
        phi = build_covering_to_GY1(example_witness, example_system, 2, y=y)
        k = phi.target.scwol

        for v, vertex in enumerate(y.vertices):
            assert k.vertices[phi.vertex_map[v]].type == vertex.type

    def test_trivial_element_on_conjugation_edge(self, example_system, example_witness):
        phi = build_covering_to_GY1(example_witness, example_system, 2)
        y = build_Yn(example_witness, example_system, 2)
        lower = ChamberId(1, (0,))
        a = y.scwol.edge_index[(y.vertex(lower, ["s4"]), y.vertex(lower, ["s1", "s4"]))]

        assert phi.edge_elements[a] != 0
        assert "commuting square" in validate_morphism(phi.with_edge_element(a, 0)).axioms()
