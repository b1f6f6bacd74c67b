import numpy as np
import pytest

from davis_lattice.cog.complex import (
    has_trivial_type0_groups, identity_map, local_order_profile, simple_complex, subdivide_complex, validate_cog
)
from davis_lattice.cog.scwol import Scwol
from davis_lattice.coxeter.group import cyclic_group, enumerate_group
from davis_lattice.error import ConstructionError


@pytest.fixture
def square_complex(coxeter, square_poset):
    """Special subgroups of the right-angled group on {a, b}, included along the poset"""
    sys = coxeter("a b", {})
    local = [enumerate_group(sys, t) for t in square_poset.vertices]
    psi = [
        [local[t].evaluate(local[i].word(g)) for g in range(local[i].size)]
        for i, t in square_poset.edges
    ]
    return simple_complex(square_poset, local, psi, name="W")


@pytest.fixture
def flat_chain():
    """C2 at every vertex of the chain 0 < 1 < 2 < 3 with identity edge maps"""
    scwol = Scwol.from_poset([0, 1, 2, 3], lambda x, y: x < y)
    return simple_complex(scwol, [cyclic_group(2)] * 4, [[0, 1]] * 6, name="flat")


class TestValidateCog:
    def test_chain(self, chain_complex):
        report = validate_cog(chain_complex)

        assert report.passed
        assert report.stats == {"vertices": 3, "edges": 3, "pairs": 1, "triples": 0}

    def test_square(self, square_complex):
        assert validate_cog(square_complex).passed
        assert square_complex.local_orders() == (1, 2, 2, 4)

    def test_not_injective(self, chain_complex):
        assert validate_cog(chain_complex.with_psi(2, [0, 0])).axioms() == ["edge map injective"]

    def test_not_homomorphism(self, chain_complex):
        assert "edge map homomorphism" in validate_cog(chain_complex.with_psi(1, [0, 2])).axioms()

    def test_image_out_of_range(self, chain_complex):
        assert validate_cog(chain_complex.with_psi(0, [0, 7])).axioms() == ["edge map"]

    def test_twist_by_centralizer(self, chain_complex):
        twisted = chain_complex.with_twist({(2, 0): 1})

        assert not twisted.is_simple
        assert twisted.g(2, 0) == 1
        assert validate_cog(twisted).passed

    def test_twist_breaks_compatibility(self, chain_complex):
        assert validate_cog(chain_complex.with_twist({(2, 0): 2})).axioms() == ["compatibility"]

    def test_twist_breaks_cocycle(self, flat_chain):
        (a, b, _), = flat_chain.scwol.composable_triples()
        report = validate_cog(flat_chain.with_twist({(a, b): 1}))

        assert report.axioms() == ["cocycle"]
        assert report.stats == {"vertices": 4, "edges": 6, "pairs": 4, "triples": 1}

    def test_constant_twist_is_cocycle(self, flat_chain):
        twist = {pair: 1 for pair in flat_chain.scwol.composable_pairs()}

        assert validate_cog(flat_chain.with_twist(twist)).passed


class TestHelpers:
    def test_identity_map(self, s3):
        assert identity_map(s3).tolist() == [0, 1, 2, 3, 4, 5]

    def test_type0_groups(self, square_complex, square_poset):
        c2 = cyclic_group(2)
        bad = simple_complex(square_poset, [c2] * 4, [np.arange(2)] * 5)

        assert has_trivial_type0_groups(square_complex)
        assert not has_trivial_type0_groups(bad)

    def test_local_order_profile(self, square_complex):
        assert local_order_profile(square_complex) == {(): (1,), ("a",): (2,), ("b",): (2,), ("a", "b"): (4,)}


class TestSubdivideComplex:
    def test_chains_carry_head_groups(self, chain_complex):
        sub, subdivision = subdivide_complex(chain_complex)

        assert validate_cog(sub).passed
        assert sub.local_orders() == tuple(chain_complex.local[c.head].size for c in subdivision.chains)
        assert sub.name == "chain'"

    def test_square(self, square_complex):
        sub, _ = subdivide_complex(square_complex)

        assert validate_cog(sub).passed
        assert len(sub.local) == 11

    def test_twisted(self, chain_complex):
        with pytest.raises(ConstructionError, match="Only simple"):
            subdivide_complex(chain_complex.with_twist({(2, 0): 1}))
