"""Finite-type recognition of Coxeter diagrams."""
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from davis_lattice.coxeter.system import INFINITY, CoxeterSystem

EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 3): 120,
    ("H", 4): 14400,
}


@dataclass(frozen=True)
class ComponentType:
    family: str
    rank: int
    members: Tuple[str, ...]
    label: Optional[int] = None

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.label})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        if self.family == "A":
            return math.factorial(self.rank + 1)
        if self.family == "B":
            return 2 ** self.rank * math.factorial(self.rank)
        if self.family == "D":
            return 2 ** (self.rank - 1) * math.factorial(self.rank)
        if self.family == "I2":
            return 2 * self.label
        return EXCEPTIONAL_ORDERS[(self.family, self.rank)]


@dataclass(frozen=True)
class SphericalSubset:
    members: Tuple[str, ...]
    components: Tuple[ComponentType, ...]

    @property
    def type_name(self) -> str:
        return " x ".join(c.name for c in self.components) or "trivial"

    def __contains__(self, s: str) -> bool:
        return s in self.members

    def __len__(self) -> int:
        return len(self.members)


def coxeter_diagram(sys: CoxeterSystem, members: Iterable[str]) -> nx.Graph:
    """
    Build the Coxeter diagram restricted to members
    :param sys: Coxeter system
    :param members: Generator subset
    :return: Graph with an edge for every label >= 3 (stored as the "label" attribute)
    """
    graph = nx.Graph()
    ordered = sys.ordered(members)
    graph.add_nodes_from(ordered)
    for s, t in combinations(ordered, 2):
        label = sys.m(s, t)
        if label != 2:
            graph.add_edge(s, t, label=label)
    return graph


def _arms(tree: nx.Graph, branch: str) -> List[int]:
    arms = []
    for start in tree.neighbors(branch):
        length, previous, current = 1, branch, start
        while tree.degree(current) == 2:
            previous, current = current, next(v for v in tree.neighbors(current) if v != previous)
            length += 1
        arms.append(length)
    return sorted(arms)


def classify_component(graph: nx.Graph, members: Tuple[str, ...]) -> Optional[ComponentType]:
    """
    Classify one connected diagram component
    :param graph: Diagram of the component
    :param members: Component generators in declaration order
    :return: Finite type or None when the component is not of finite type
    """
    rank = len(members)
    if rank == 1:
        return ComponentType("A", 1, members)
    labels = [d["label"] for _, _, d in graph.edges(data=True)]
    if INFINITY in labels:
        return None
    if rank == 2:
        return ComponentType("I2", 2, members, int(labels[0]))
    if graph.number_of_edges() != rank - 1 or any(label > 5 for label in labels):
        return None
    degrees = dict(graph.degree())
    branches = [v for v, d in degrees.items() if d >= 3]
    odd = [(u, v, d["label"]) for u, v, d in graph.edges(data=True) if d["label"] != 3]

    if not odd:
        if not branches:
            return ComponentType("A", rank, members)
        if len(branches) > 1 or degrees[branches[0]] > 3:
            return None
        arms = _arms(graph, branches[0])
        if arms[:2] == [1, 1]:
            return ComponentType("D", rank, members)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return ComponentType("E", rank, members)
        return None

    if len(odd) > 1 or branches:
        return None
    u, v, label = odd[0]
    at_end = degrees[u] == 1 or degrees[v] == 1
    if label == 4:
        if at_end:
            return ComponentType("B", rank, members)
        if rank == 4:
            return ComponentType("F", 4, members)
        return None
    if label == 5 and at_end and rank in (3, 4):
        return ComponentType("H", rank, members)
    return None


@lru_cache(maxsize=None)
def _is_spherical(sys: CoxeterSystem, members: FrozenSet[str]) -> Optional[SphericalSubset]:
    ordered = sys.ordered(members)
    if any(sys.m(s, t) == INFINITY for s, t in combinations(ordered, 2)):
        return None
    diagram = coxeter_diagram(sys, ordered)
    components = []
    for component in nx.connected_components(diagram):
        component_members = sys.ordered(component)
        kind = classify_component(diagram.subgraph(component_members), component_members)
        if kind is None:
            return None
        components.append(kind)
    components.sort(key=lambda c: sys.index(c.members[0]))
    return SphericalSubset(ordered, tuple(components))


def is_spherical(sys: CoxeterSystem, members: Iterable[str]) -> Optional[SphericalSubset]:
    """
    Decide sphericity of a generator subset by diagram classification
    :param sys: Coxeter system
    :param members: Generator subset
    :return: SphericalSubset with per-component types, or None
    """
    members = frozenset(members)
    for s in members:
        sys.index(s)
    return _is_spherical(sys, members)


def spherical_order(subset: SphericalSubset) -> int:
    return math.prod(c.order for c in subset.components)


def spherical_subsets(sys: CoxeterSystem) -> List[SphericalSubset]:
    """
    All spherical subsets including the empty one, ordered by size then generator positions
    :param sys: Coxeter system
    :return: List of SphericalSubset objects
    """
    finite = nx.Graph()
    finite.add_nodes_from(sys.generators)
    finite.add_edges_from((s, t) for s, t, _ in sys.finite_pairs())
    result = [is_spherical(sys, ())]
    for clique in nx.enumerate_all_cliques(finite):
        subset = is_spherical(sys, clique)
        if subset is not None:
            result.append(subset)
    result.sort(key=lambda T: sys.subsets_key(T.members))
    return result
