import textwrap

import pytest

from davis_lattice.config import Bounds
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.nerve.catalog import two_apex
from davis_lattice.nerve.witness import find_witnesses
from davis_lattice.parser import parse_system
from davis_lattice.parser import yaml


@pytest.fixture
def yaml_text():
    def _yaml_text(string_data):
        return textwrap.dedent(string_data)

    return _yaml_text


@pytest.fixture
def yaml_ast():
    def _yaml_ast(string_data):
        return yaml.load(textwrap.dedent(string_data), "TEST")

    return _yaml_ast


@pytest.fixture
def system_text():
    def _system_text(string_data, syntax="text"):
        return parse_system(textwrap.dedent(string_data), "TEST", syntax)

    return _system_text


@pytest.fixture
def coxeter():
    def _coxeter(generators, labels, default=2):
        return CoxeterSystem.from_labels(generators.split(), labels, default)

    return _coxeter


@pytest.fixture
def bounds():
    return Bounds()


@pytest.fixture
def example_system():
    return two_apex(4, 4)


@pytest.fixture
def odd_system():
    return two_apex(3, 3)


@pytest.fixture
def example_witness(example_system):
    return find_witnesses(example_system, limit=1)[0]
