"""
Complexes of groups G(Y_1) and G(Y_n) and the covering G(Y_n) -> G(Y_1).

A vertex of type T lying in a single chamber carries W_T; a vertex in the interior mirror K_s
carries Half_s(W_T). Edge maps are inclusions, except on edges running from a vertex of a single
chamber of level k into an interior mirror shared with level k + 1, where the map is Ad(s).
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from davis_lattice.cog.complex import ComplexOfGroups, simple_complex
from davis_lattice.cog.morphism import CogMorphism
from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import FiniteGroupTable, enumerate_group, halving
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.coxeter.words import Word
from davis_lattice.davis.chamber import ChamberComplex, build_chamber, build_Yn
from davis_lattice.error import ConstructionError
from davis_lattice.nerve.nerve import build_nerve
from davis_lattice.nerve.witness import Witness, check_conditions

logger = logging.getLogger(__name__)

INCLUSION = "inclusion"
CONJUGATION = "conjugation"


@dataclass(frozen=True, eq=False)
class LocalGroup:
    """A local group together with its embedding into the special subgroup W_T it lives in."""

    table: FiniteGroupTable
    ambient: FiniteGroupTable
    embedding: np.ndarray
    members: Tuple[str, ...]
    halved: Optional[str] = None

    @cached_property
    def lookup(self) -> np.ndarray:
        """Ambient element -> local index, -1 outside the local group"""
        lookup = np.full(self.ambient.size, -1, dtype=np.int64)
        lookup[self.embedding] = np.arange(self.table.size)
        return lookup

    def __str__(self) -> str:
        inner = "W_{" + ",".join(self.members) + "}"
        return f"Half_{self.halved}({inner})" if self.halved else inner


@dataclass(frozen=True)
class EdgeInfo:
    kind: str
    mirror: Optional[str] = None


@lru_cache(maxsize=None)
def local_group(sys: CoxeterSystem, members: Tuple[str, ...], s: Optional[str] = None,
                bounds: Bounds = Bounds()) -> LocalGroup:
    """
    W_T, or Half_s(W_T) when s is given
    :param sys: Coxeter system
    :param members: Spherical subset T in declaration order
    :param s: Generator of T to halve along
    :param bounds: Resource bounds
    :return: LocalGroup object
    """
    ambient = enumerate_group(sys, members, bounds)
    if s is None:
        return LocalGroup(ambient, ambient, np.arange(ambient.size, dtype=np.int64), members)
    half = halving(sys, members, s, bounds)
    if half is None:
        raise ConstructionError(
            f"W_T is not halvable along s for (T, s) = ({sys.format_type(members)}, {s})"
        )
    name = f"Half_{s}(W_{sys.format_type(members)})"
    table, embedding = half.as_table(name)
    return LocalGroup(table, ambient, embedding, members, s)


@lru_cache(maxsize=65536)
def _transport(src: LocalGroup, dst: LocalGroup, letters: Tuple[Tuple[str, Word], ...]) -> np.ndarray:
    substitution = dict(letters)
    words = src.ambient.element_words
    images = np.empty(src.table.size, dtype=np.int64)
    for g, x in enumerate(src.embedding):
        word = [letter for t in words[x] for letter in substitution[t]]
        images[g] = dst.lookup[dst.ambient.evaluate(word)]
    if (images < 0).any():
        raise ConstructionError(f"Generator substitution does not map {src} into {dst}")
    images.setflags(write=False)
    return images


def transport_map(src: LocalGroup, dst: LocalGroup, letters: Mapping[str, Word]) -> np.ndarray:
    """
    Element map induced by substituting a word for every generator of the source
    :param src: Source local group
    :param dst: Target local group
    :param letters: Generator t of src -> word over the generators of dst
    :return: Index array src -> dst
    """
    return _transport(src, dst, tuple(sorted((t, tuple(letters[t])) for t in src.members)))


def inclusion_letters(members: Tuple[str, ...]) -> Dict[str, Word]:
    return {t: (t,) for t in members}


def conjugation_letters(members: Tuple[str, ...], s: str) -> Dict[str, Word]:
    return {t: (s, t, s) for t in members}


def vertex_local_groups(y: ChamberComplex, bounds: Bounds = Bounds()) -> Tuple[LocalGroup, ...]:
    sys = y.system
    return tuple(
        local_group(sys, sys.ordered(vertex.type), vertex.mirror if vertex.is_shared else None, bounds)
        for vertex in y.vertices
    )


def edge_info(y: ChamberComplex, a: int) -> EdgeInfo:
    """
    Decide the kind of edge map along an edge of Y_n
    :param y: Chamber complex
    :param a: Edge index
    :return: EdgeInfo with kind and the interior mirror generator met by the edge
    """
    i, t = y.scwol.edges[a]
    start, end = y.vertices[i], y.vertices[t]
    if not end.is_shared:
        return EdgeInfo(INCLUSION)
    if start.is_shared:
        return EdgeInfo(INCLUSION, end.mirror)
    other = next(cid for cid in end.chambers if cid != start.chamber)
    if other.level == start.chamber.level + 1:
        return EdgeInfo(CONJUGATION, end.mirror)
    return EdgeInfo(INCLUSION, end.mirror)


def build_complex_of_groups(y: ChamberComplex, bounds: Bounds = Bounds(), name: str = "") -> ComplexOfGroups:
    """
    Simple complex of groups over a chamber complex
    :param y: Chamber complex
    :param bounds: Resource bounds
    :param name: Name of the complex
    :return: ComplexOfGroups whose edge_info holds an EdgeInfo per edge
    """
    groups = vertex_local_groups(y, bounds)
    infos, psi = [], []
    for a, (i, t) in enumerate(y.scwol.edges):
        info = edge_info(y, a)
        src = groups[i]
        if info.kind == CONJUGATION:
            letters = conjugation_letters(src.members, info.mirror)
        else:
            letters = inclusion_letters(src.members)
        psi.append(transport_map(src, groups[t], letters))
        infos.append(info)
    complex_of_groups = simple_complex(y.scwol, [g.table for g in groups], psi, infos, name)
    logger.debug("%s: %d local groups, %d conjugation edges", name or "complex of groups", len(groups),
                 sum(info.kind == CONJUGATION for info in infos))
    return complex_of_groups


def build_GY1(sys: CoxeterSystem, bounds: Bounds = Bounds()) -> ComplexOfGroups:
    """
    G(Y_1): W_T at the vertex of type T, natural inclusions along edges
    :param sys: Coxeter system
    :param bounds: Resource bounds
    :return: ComplexOfGroups over the chamber K
    """
    return build_complex_of_groups(build_chamber(sys), bounds, "G(Y_1)")


def build_GYn(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
              force: bool = False, y: Optional[ChamberComplex] = None) -> ComplexOfGroups:
    """
    G(Y_n)
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param force: Build even if the witness conditions fail for sys
    :param y: Prebuilt Y_n
    :return: ComplexOfGroups over Y_n
    """
    if not force:
        failed = check_conditions(sys, build_nerve(sys), wit.s1, wit.s2, wit.alpha1, wit.alpha2, bounds)
        if failed:
            raise ConstructionError(f"Not a witness for {sys}: {', '.join(failed)} fails")
    y = y or build_Yn(wit, sys, n)
    return build_complex_of_groups(y, bounds, f"G(Y_{n})")


def build_covering_to_GY1(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
                          y: Optional[ChamberComplex] = None, gyn: Optional[ComplexOfGroups] = None,
                          gy1: Optional[ComplexOfGroups] = None) -> CogMorphism:
    """
    The covering Phi_n: G(Y_n) -> G(Y_1) over the type-forgetting map
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param y: Prebuilt Y_n
    :param gyn: Prebuilt G(Y_n) over y
    :param gy1: Prebuilt G(Y_1)
    :return: CogMorphism with phi(a) = s on conjugation edges, trivial elsewhere
    """
    y = y or build_Yn(wit, sys, n)
    gyn = gyn or build_GYn(wit, sys, n, bounds, y=y)
    gy1 = gy1 or build_GY1(sys, bounds)
    k = gy1.scwol
    chamber_vertex = {vertex.type: v for v, vertex in enumerate(k.vertices)}
    vertex_map = tuple(chamber_vertex[vertex.type] for vertex in y.vertices)
    edge_map = tuple(k.edge_index[(vertex_map[i], vertex_map[t])] for i, t in y.scwol.edges)
    local_maps = tuple(group.embedding for group in vertex_local_groups(y, bounds))
    edge_elements = []
    for a, (_, t) in enumerate(y.scwol.edges):
        info: EdgeInfo = gyn.edge_info[a]
        if info.kind == CONJUGATION:
            edge_elements.append(gy1.local[vertex_map[t]].gen_images[info.mirror])
        else:
            edge_elements.append(0)
    logger.debug("Covering of %s onto G(Y_1) with %d edges", gyn.name, len(edge_map))
    return CogMorphism(gyn, gy1, vertex_map, edge_map, local_maps, tuple(edge_elements))
