import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Tuple

from networkx.algorithms.isomorphism import GraphMatcher

from davis_lattice.config import Bounds
from davis_lattice.error import ResourceError
from davis_lattice.nerve.nerve import Nerve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelAut:
    """A label-preserving permutation of the generators, stored as position images."""

    generators: Tuple[str, ...]
    images: Tuple[int, ...]

    @classmethod
    def identity(cls, generators: Tuple[str, ...]) -> "LabelAut":
        return cls(generators, tuple(range(len(generators))))

    @classmethod
    def from_mapping(cls, generators: Tuple[str, ...], mapping: dict) -> "LabelAut":
        position = {s: i for i, s in enumerate(generators)}
        return cls(generators, tuple(position[mapping.get(s, s)] for s in generators))

    def __call__(self, s: str) -> str:
        return self.generators[self.images[self.generators.index(s)]]

    def apply(self, members: Iterable[str]) -> FrozenSet[str]:
        return frozenset(self(s) for s in members)

    def compose(self, other: "LabelAut") -> "LabelAut":
        """self after other"""
        return LabelAut(self.generators, tuple(self.images[i] for i in other.images))

    def inverse(self) -> "LabelAut":
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return LabelAut(self.generators, tuple(images))

    def power(self, k: int) -> "LabelAut":
        result = LabelAut.identity(self.generators)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    @cached_property
    def order(self) -> int:
        k, current = 1, self
        while not current.is_identity:
            current = self.compose(current)
            k += 1
        return k

    @property
    def moves(self) -> FrozenSet[str]:
        return frozenset(self.generators[i] for i, j in enumerate(self.images) if i != j)

    def orbit(self, s: str) -> List[str]:
        orbit = [s]
        while self(orbit[-1]) != s:
            orbit.append(self(orbit[-1]))
        return orbit

    def cycles(self) -> str:
        """Cycle notation, () for the identity"""
        seen = set()
        parts = []
        for s in self.generators:
            if s in seen:
                continue
            cycle = self.orbit(s)
            seen.update(cycle)
            if len(cycle) > 1:
                parts.append("(" + " ".join(cycle) + ")")
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return self.cycles()


def label_automorphisms(nerve: Nerve, bounds: Bounds = Bounds()) -> List[LabelAut]:
    """
    Compute the group of label-preserving automorphisms of a nerve
    :param nerve: Nerve L
    :param bounds: Resource bounds (max_nerve_vertices applies)
    :return: All automorphisms, identity first, then by image tuple
    """
    if len(nerve.vertices) > bounds.max_nerve_vertices:
        raise ResourceError(
            f"Nerve has {len(nerve.vertices)} vertices, above bound {bounds.max_nerve_vertices}",
            "max_nerve_vertices",
        )
    graph = nerve.graph.copy()
    for s in graph.nodes:
        graph.nodes[s]["signature"] = tuple(sorted(d["label"] for _, _, d in graph.edges(s, data=True)))

    matcher = GraphMatcher(
        graph, graph,
        node_match=lambda a, b: a["signature"] == b["signature"],
        edge_match=lambda a, b: a["label"] == b["label"],
    )
    auts = sorted(
        {LabelAut.from_mapping(nerve.vertices, mapping) for mapping in matcher.isomorphisms_iter()},
        key=lambda a: a.images,
    )
    logger.debug("Nerve of %s has %d label-preserving automorphisms", nerve.system, len(auts))
    return auts


def fixes_star(nerve: Nerve, alpha: LabelAut, s: str) -> bool:
    """
    Check whether alpha fixes the closed star of s pointwise
    :param nerve: Nerve L
    :param alpha: Automorphism
    :param s: Vertex
    :return: True iff alpha fixes s and every vertex of a simplex containing s
    """
    return not (alpha.moves & nerve.star(s))


def nondiscreteness_check(nerve: Nerve, bounds: Bounds = Bounds(),
                          auts: Optional[List[LabelAut]] = None) -> Optional[Tuple[LabelAut, str]]:
    """
    Look for a nontrivial automorphism fixing the star of some vertex
    :param nerve: Nerve L
    :param bounds: Resource bounds
    :param auts: Precomputed automorphism group
    :return: First (automorphism, vertex) pair in search order, or None
    """
    auts = label_automorphisms(nerve, bounds) if auts is None else auts
    for alpha in auts:
        if alpha.is_identity:
            continue
        for s in nerve.vertices:
            if fixes_star(nerve, alpha, s):
                return alpha, s
    return None
