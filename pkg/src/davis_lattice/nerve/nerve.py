from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterator, List, Tuple

import networkx as nx

from davis_lattice.coxeter.spherical import spherical_subsets
from davis_lattice.coxeter.system import CoxeterSystem, Label


@dataclass(frozen=True)
class Nerve:
    """
    The nerve L of a Coxeter system: a simplex for every nonempty spherical subset.

    Simplices are kept in (size, generator position) order.
    """

    system: CoxeterSystem
    simplices: Tuple[FrozenSet[str], ...]

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.system.generators

    @cached_property
    def graph(self) -> nx.Graph:
        """1-skeleton with the m_st labels as edge attribute"""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for simplex in self.simplices:
            if len(simplex) == 2:
                s, t = self.system.ordered(simplex)
                graph.add_edge(s, t, label=self.system.m(s, t))
        return graph

    @cached_property
    def _simplex_set(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(self.simplices)

    def __contains__(self, simplex) -> bool:
        return frozenset(simplex) in self._simplex_set

    def label(self, s: str, t: str) -> Label:
        return self.system.m(s, t)

    def edges(self) -> List[Tuple[str, str, Label]]:
        return [(s, t, d["label"]) for s, t, d in self.graph.edges(data=True)]

    def simplices_containing(self, s: str) -> Iterator[FrozenSet[str]]:
        return (simplex for simplex in self.simplices if s in simplex)

    def star(self, s: str) -> FrozenSet[str]:
        """Vertex set of the closed star of s"""
        return frozenset().union(*self.simplices_containing(s))

    @property
    def dimension(self) -> int:
        """Simplicial dimension, -1 for an empty nerve"""
        return max((len(simplex) for simplex in self.simplices), default=0) - 1

    def f_vector(self) -> List[int]:
        counts = [0] * (self.dimension + 1)
        for simplex in self.simplices:
            counts[len(simplex) - 1] += 1
        return counts


def build_nerve(sys: CoxeterSystem) -> Nerve:
    """
    Build the nerve of a Coxeter system
    :param sys: Coxeter system
    :return: Nerve with all nonempty spherical subsets as simplices
    """
    simplices = tuple(frozenset(t.members) for t in spherical_subsets(sys) if t.members)
    return Nerve(sys, simplices)
