import numpy as np
import pytest

from davis_lattice.cog.action import ScwolAction
from davis_lattice.cog.complex import simple_complex
from davis_lattice.cog.scwol import Scwol
from davis_lattice.coxeter.group import cyclic_group, semidirect_product


@pytest.fixture
def square_poset():
    """Subsets of {a, b} ordered by inclusion"""
    payloads = [frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")]
    return Scwol.from_poset(payloads, lambda x, y: x < y)


@pytest.fixture
def s3():
    c3 = cyclic_group(3)
    return semidirect_product(c3, cyclic_group(2), np.stack([np.arange(3), c3.inv]), name="S3")


@pytest.fixture
def chain_complex(s3):
    """C2 -> C2 -> S3 over the chain 0 < 1 < 2, the generator going to a reflection"""
    scwol = Scwol.from_poset([0, 1, 2], lambda x, y: x < y)
    c2 = cyclic_group(2)
    return simple_complex(scwol, [c2, c2, s3], [[0, 1]] * 3, name="chain")


@pytest.fixture
def swap_action():
    """C2 swapping two vertices below a common top vertex"""
    scwol = Scwol.from_relation([frozenset("a"), frozenset("b"), frozenset("ab")], [(0, 2), (1, 2)])
    vperm = np.array([[0, 1, 2], [1, 0, 2]])
    eperm = np.array([[0, 1], [1, 0]])
    return ScwolAction(cyclic_group(2), scwol, vperm, eperm)


@pytest.fixture
def swap_complex(swap_action):
    c2 = cyclic_group(2)
    return simple_complex(swap_action.scwol, [c2, c2, c2], [[0, 1], [0, 1]], name="swap")
