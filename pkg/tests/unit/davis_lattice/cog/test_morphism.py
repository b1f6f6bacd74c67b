import numpy as np

from davis_lattice.cog.complex import subdivide_complex
from davis_lattice.cog.morphism import CogMorphism, identity_morphism, validate_covering, validate_morphism


class TestValidateMorphism:
    def test_identity(self, chain_complex):
        report = validate_morphism(identity_morphism(chain_complex))

        assert report.name == "morphism"
        assert report.passed

    def test_edge_element_breaks_composition(self, chain_complex):
        m = identity_morphism(chain_complex).with_edge_element(0, 1)

        assert validate_morphism(m).axioms() == ["composition"]

    def test_edge_element_breaks_square(self, chain_complex):
        m = identity_morphism(chain_complex).with_edge_element(2, 2)

        assert "commuting square" in validate_morphism(m).axioms()

    def test_bad_vertex_map(self, chain_complex):
        m = identity_morphism(chain_complex)
        broken = CogMorphism(m.source, m.target, (0, 0, 5), m.edge_map, m.local_maps, m.edge_elements)

        assert validate_morphism(broken).axioms() == ["scwol morphism"]

    def test_edge_map_must_follow_vertices(self, chain_complex):
        m = identity_morphism(chain_complex)
        broken = CogMorphism(m.source, m.target, m.vertex_map, (1, 1, 2), m.local_maps, m.edge_elements)

        assert "scwol morphism" in validate_morphism(broken).axioms()

    def test_local_map_not_homomorphism(self, chain_complex):
        m = identity_morphism(chain_complex)
        local = (m.local_maps[0], m.local_maps[1], np.array([0, 2, 1, 3, 4, 5]))
        broken = CogMorphism(m.source, m.target, m.vertex_map, m.edge_map, local, m.edge_elements)

        assert validate_morphism(broken).axioms() == ["local map homomorphism"]


class TestValidateCovering:
    def test_identity_is_covering(self, chain_complex):
        report = validate_covering(identity_morphism(chain_complex))

        assert report.name == "covering"
        assert report.passed
        assert report.stats["fiber_sizes"] == {1: 3}

    def test_trivial_local_maps(self, chain_complex):
        m = identity_morphism(chain_complex)
        local = tuple(np.zeros(g.size, dtype=np.int64) for g in chain_complex.local)
        collapsed = CogMorphism(m.source, m.target, m.vertex_map, m.edge_map, local, m.edge_elements)

        assert validate_morphism(collapsed).passed
        assert validate_covering(collapsed).axioms() == ["local map injective"]

    def test_subdivided_identity(self, chain_complex):
        sub, _ = subdivide_complex(chain_complex)

        assert validate_covering(identity_morphism(sub)).passed
