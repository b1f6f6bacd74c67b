"""Complex of groups induced by an action on a complex of groups, with its covering and its map to the group."""
import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from davis_lattice.cog.action import ComplexAction, Quotient, quotient_scwol
from davis_lattice.cog.complex import ComplexOfGroups
from davis_lattice.cog.morphism import CogMorphism
from davis_lattice.cog.scwol import Scwol
from davis_lattice.coxeter.group import FiniteGroupTable, Subgroup, semidirect_product
from davis_lattice.error import ConstructionError
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class InducedQuotientData:
    """
    Choices behind an induced complex: lift of every quotient vertex and edge, h_b per quotient
    edge (h_b . t(lift b) = lift t(b)), k_v per source vertex (k_v . v = lift of its image)
    and the stabilizers Stab_H(lift) as sorted member tuples.
    """

    quotient: Quotient
    lifts: Tuple[int, ...]
    edge_lifts: Tuple[int, ...]
    h_edge: Tuple[int, ...]
    k_vertex: Tuple[int, ...]
    stabilizers: Tuple[Tuple[int, ...], ...]
    group: FiniteGroupTable


def induce_quotient_cog(ca: ComplexAction, lift_policy: str = "least"
                        ) -> Tuple[ComplexOfGroups, CogMorphism, InducedQuotientData]:
    """
    Build the complex of groups H(Z) on the quotient with local groups G_lift x| Stab_H(lift)
    :param ca: Validated action on a simple complex of groups
    :param lift_policy: least or greatest orbit representatives as lifts
    :return: Tuple (H(Z), covering C -> H(Z), choices)
    """
    c, act = ca.complex, ca.action
    if not c.is_simple:
        raise ConstructionError("Induced complexes need a simple complex of groups")
    group, scwol = act.group, c.scwol
    quotient = quotient_scwol(act, lift_policy)
    lifts = quotient.vertex_reps

    stabilizers = []
    local = []
    lookups = []
    for tau, lift in enumerate(lifts):
        members = act.stabilizer(lift)
        table, _ = Subgroup(group, members).as_table(f"Stab({tau})")
        action = np.stack([ca.local_iso(h, lift) for h in members])
        local.append(semidirect_product(c.local[lift], table, action, name=f"H_{tau}"))
        lookup = np.full(group.size, -1, dtype=np.int64)
        lookup[members] = np.arange(len(members))
        stabilizers.append(tuple(members))
        lookups.append(lookup)

    edge_lifts, h_edge, psi, twist = [], [], [], {}
    for b, orbit in enumerate(quotient.edge_orbits):
        i_b, t_b = quotient.scwol.edges[b]
        lifted = [a for a in orbit if scwol.i(a) == lifts[i_b]]
        if len(lifted) != 1:
            raise ConstructionError(f"Quotient edge {b} has {len(lifted)} lifts at its initial vertex")
        a = lifted[0]
        h_b = act.transporter(scwol.t(a), lifts[t_b])
        edge_lifts.append(a)
        h_edge.append(h_b)

        size_i, size_t = len(stabilizers[i_b]), len(stabilizers[t_b])
        g = np.repeat(np.arange(c.local[lifts[i_b]].size), size_i)
        k = np.tile(np.arange(size_i), c.local[lifts[i_b]].size)
        first = ca.local_iso(h_b, scwol.t(a))[c.psi[a][g]]
        conj = group.mult[group.mult[h_b, np.asarray(stabilizers[i_b])[k]], group.inv[h_b]]
        second = lookups[t_b][conj]
        if (second < 0).any():
            raise ConstructionError(f"Conjugated stabilizer escapes Stab at quotient edge {b}")
        psi.append(first * size_t + second)

    qscwol: Scwol = quotient.scwol
    for (a, b), ab in qscwol.composition.items():
        element = group.mult[group.mult[h_edge[a], h_edge[b]], group.inv[h_edge[ab]]]
        k = int(lookups[qscwol.t(a)][element])
        if k < 0:
            raise ConstructionError(f"Twist of quotient edges {a},{b} is not in the stabilizer")
        if k:
            twist[(a, b)] = k

    hz = ComplexOfGroups(qscwol, tuple(local), tuple(psi), twist, name=f"H({c.name})")

    k_vertex = tuple(act.transporter(v, lifts[int(quotient.vertex_proj[v])]) for v in range(len(scwol.vertices)))
    local_maps = []
    for v in range(len(scwol.vertices)):
        tau = int(quotient.vertex_proj[v])
        local_maps.append(ca.local_iso(k_vertex[v], v) * len(stabilizers[tau]))
    edge_elements = []
    for a, (i, t) in enumerate(scwol.edges):
        b = int(quotient.edge_proj[a])
        tau = int(quotient.vertex_proj[t])
        x = group.mult[group.mult[k_vertex[t], group.inv[k_vertex[i]]], group.inv[h_edge[b]]]
        k = int(lookups[tau][x])
        if k < 0:
            raise ConstructionError(f"Covering element of edge {a} is not in the stabilizer")
        edge_elements.append(k)
    covering = CogMorphism(c, hz, tuple(int(x) for x in quotient.vertex_proj),
                           tuple(int(x) for x in quotient.edge_proj), tuple(local_maps), tuple(edge_elements))

    data = InducedQuotientData(quotient, tuple(lifts), tuple(edge_lifts), tuple(h_edge), k_vertex,
                               tuple(stabilizers), group)
    logger.debug("Induced complex: %d vertices, local orders %s", len(lifts), hz.local_orders())
    return hz, covering, data


def group_as_complex(group: FiniteGroupTable) -> ComplexOfGroups:
    """A group seen as a complex of groups over a single vertex"""
    return ComplexOfGroups(Scwol((group.name or "H",), ()), (group,), ())


def canonical_morphism_to_group(hz: ComplexOfGroups, data: InducedQuotientData) -> CogMorphism:
    """
    Morphism H(Z) -> H: trivial on the G factor, inclusion on the stabilizer, h_b on edges
    :param hz: Induced complex
    :param data: Choices returned with it
    :return: CogMorphism onto the single-vertex complex of H
    """
    target = group_as_complex(data.group)
    local_maps = []
    for tau, members in enumerate(data.stabilizers):
        size = len(members)
        local_maps.append(np.asarray(members, dtype=np.int64)[np.arange(hz.local[tau].size) % size])
    return CogMorphism(hz, target, tuple(0 for _ in hz.local), None, tuple(local_maps), tuple(data.h_edge))


def check_canonical_kernels(hz: ComplexOfGroups, data: InducedQuotientData, m: CogMorphism) -> CheckReport:
    """
    Per vertex, the map to H has kernel exactly the G factor and image exactly the stabilizer
    :return: CheckReport
    """
    report = CheckReport("canonical morphism kernels")
    for tau, members in enumerate(data.stabilizers):
        size = len(members)
        kernel = np.flatnonzero(m.local_maps[tau] == 0)
        expected = np.arange(0, hz.local[tau].size, size)
        if not np.array_equal(kernel, expected):
            report.add("kernel is the local group of the lift", f"vertex {tau}")
        if sorted(set(int(x) for x in m.local_maps[tau])) != sorted(members):
            report.add("image is the stabilizer", f"vertex {tau}")
    return report
