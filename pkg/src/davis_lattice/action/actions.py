"""
Actions of H_n on Y_n and on G(Y_n).

The shift of H_n acts on the top chamber through alpha_{n-1} and carries the copy Y^j_{n-1} onto
Y^{j+r}_{n-1}; the j-th child acts on Y^j_{n-1} through F^j and fixes everything else. Actions are
evaluated per chamber as (image chamber, type permutation) and applied to the barycentric
subdivision of the poset scwol of Y_n.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from davis_lattice.action.wreath import WreathElement, WreathGroup, wreath_group
from davis_lattice.cog.action import ComplexAction, ScwolAction, extend_action_to_cog, subdivide_action
from davis_lattice.cog.complex import ComplexOfGroups, subdivide_complex
from davis_lattice.cog.scwol import Subdivision, subdivide
from davis_lattice.config import Bounds
from davis_lattice.coxeter.group import FiniteGroupTable
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.davis.chamber import ChamberComplex, ChamberId, build_Yn
from davis_lattice.davis.complexes import build_GYn, transport_map, vertex_local_groups
from davis_lattice.error import ConstructionError
from davis_lattice.nerve.automorphisms import LabelAut
from davis_lattice.nerve.witness import Witness
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


def chamber_image(wit: Witness, h: WreathElement, n: int, cid: ChamberId) -> Tuple[ChamberId, LabelAut]:
    """
    Image of a chamber under h in H_n
    :param wit: Witness
    :param h: Element of H_n
    :param n: Truncation level
    :param cid: Chamber of Y_n
    :return: Tuple (image chamber, permutation of types): the vertex of type T goes to perm(T)
    """
    identity = LabelAut.identity(wit.alpha1.generators)
    if n == 1:
        return cid, identity
    alpha = wit.alpha(n - 1)
    if cid.level == n:
        return cid, alpha.power(h.shift)
    q = wit.q(n - 1)
    j = (cid.js[0] + h.shift) % q
    inner_cid, inner = chamber_image(wit, h.children[j], n - 1, ChamberId(cid.level, cid.js[1:]))
    conjugated = alpha.power(j).compose(inner).compose(alpha.power(-j))
    return ChamberId(inner_cid.level, (j,) + inner_cid.js), conjugated.compose(alpha.power(h.shift))


@dataclass(frozen=True, eq=False)
class ChamberAction:
    """
    H_n acting on Y_n: chamber-level data, the action on the poset scwol and on its subdivision.

    perms[g][c] is the type permutation of element g on chamber c (chamber order of y).
    """

    wreath: WreathGroup
    group: FiniteGroupTable
    y: ChamberComplex
    chamber_perm: np.ndarray
    perms: Tuple[Tuple[LabelAut, ...], ...]
    base: ScwolAction
    subdivision: Subdivision
    action: ScwolAction

    def chamber_orbits(self) -> List[List[ChamberId]]:
        return chamber_orbits(self)


def act_on_Yn(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
              y: Optional[ChamberComplex] = None) -> ChamberAction:
    """
    Evaluate the H_n action on every chamber and transport it to the subdivision of Y_n
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds (max_action_order bounds |H_n|)
    :param y: Prebuilt Y_n
    :return: ChamberAction
    """
    y = y or build_Yn(wit, sys, n)
    wreath = wreath_group(wit, n)
    group = wreath.table(bounds)
    elements = wreath.elements(bounds)
    chamber_number = {cid: c for c, cid in enumerate(y.chambers)}

    nv, ne = len(y.vertices), len(y.scwol.edges)
    vperm = np.full((group.size, nv), -1, dtype=np.int64)
    chamber_perm = np.empty((group.size, len(y.chambers)), dtype=np.int64)
    perms = []
    for g, h in enumerate(elements):
        row = []
        for c, cid in enumerate(y.chambers):
            target, perm = chamber_image(wit, h, n, cid)
            chamber_perm[g, c] = chamber_number[target]
            row.append(perm)
            for members in y.types:
                v = y.vertex_index[(cid, members)]
                image = y.vertex_index[(target, perm.apply(members))]
                if vperm[g, v] >= 0 and vperm[g, v] != image:
                    raise ConstructionError(f"Element {h} is not well defined on vertex {y.vertices[v]}")
                vperm[g, v] = image
        perms.append(tuple(row))

    edge_index = y.scwol.edge_index
    eperm = np.empty((group.size, ne), dtype=np.int64)
    for a, (i, t) in enumerate(y.scwol.edges):
        for g in range(group.size):
            key = (int(vperm[g, i]), int(vperm[g, t]))
            if key not in edge_index:
                raise ConstructionError(f"Element {elements[g]} does not preserve edge {a}")
            eperm[g, a] = edge_index[key]
    base = ScwolAction(group, y.scwol, vperm, eperm)
    subdivision = subdivide(y.scwol)
    action = subdivide_action(base, subdivision)
    logger.debug("H_%d of order %d acting on %d chambers, %d subdivided vertices",
                 n, group.size, len(y.chambers), len(subdivision.chains))
    return ChamberAction(wreath, group, y, chamber_perm, tuple(perms), base, subdivision, action)


def chamber_orbits(act: ChamberAction) -> List[List[ChamberId]]:
    """Chamber orbits, each sorted, ordered by their least chamber"""
    chambers = act.y.chambers
    orbits: Dict[int, List[ChamberId]] = {}
    for c in range(len(chambers)):
        orbits.setdefault(int(act.chamber_perm[:, c].min()), []).append(chambers[c])
    return [sorted(orbit) for _, orbit in sorted(orbits.items())]


@dataclass(frozen=True, eq=False)
class GroupsAction:
    """H_n acting on the subdivided G(Y_n)."""

    chamber_action: ChamberAction
    gyn: ComplexOfGroups
    complex_action: ComplexAction
    report: CheckReport


def act_on_GYn(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
               chamber_action: Optional[ChamberAction] = None,
               gyn: Optional[ComplexOfGroups] = None) -> GroupsAction:
    """
    Extend the H_n action to the subdivided G(Y_n) by transporting generators
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param chamber_action: Prebuilt action on Y_n
    :param gyn: Prebuilt G(Y_n) over chamber_action.y
    :return: GroupsAction holding the validation report of the local isomorphisms
    """
    chamber_action = chamber_action or act_on_Yn(wit, sys, n, bounds)
    y = chamber_action.y
    gyn = gyn or build_GYn(wit, sys, n, bounds, y=y)
    subdivided, _ = subdivide_complex(gyn, chamber_action.subdivision)
    groups = vertex_local_groups(y, bounds)
    chamber_number = {cid: c for c, cid in enumerate(y.chambers)}
    vperm = chamber_action.base.vperm
    chains = chamber_action.subdivision.chains

    def local_iso(h: int, v: int) -> np.ndarray:
        head = chains[v].head
        perm = chamber_action.perms[h][chamber_number[y.vertices[head].chamber]]
        src, dst = groups[head], groups[int(vperm[h, head])]
        return transport_map(src, dst, {t: (perm(t),) for t in src.members})

    complex_action, report = extend_action_to_cog(subdivided, chamber_action.action, local_iso)
    return GroupsAction(chamber_action, subdivided, complex_action, report)
