import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from davis_lattice.action.actions import ChamberAction, act_on_Yn, chamber_orbits
from davis_lattice.cog.action import Quotient, quotient_scwol
from davis_lattice.cog.scwol import payload_type
from davis_lattice.config import Bounds
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.davis.chamber import ChamberId
from davis_lattice.nerve.witness import Witness
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FundamentalDomain:
    """
    Z_n = H_n \\ Y_n on the subdivided scwol.

    lifts[k] is the chamber (k, 0, ..., 0) standing for K_k; identified[k] lists the mirror types
    of that chamber which become one mirror in K_k; chain is the graph of chamber images with
    the meeting mirror as edge label.
    """

    action: ChamberAction
    quotient: Quotient
    lifts: Dict[int, ChamberId]
    identified: Dict[int, Tuple[str, ...]]
    chain: nx.Graph

    @property
    def chamber_images(self) -> int:
        return len(chamber_orbits(self.action))

    def cone_points(self) -> List[int]:
        """Quotient vertices of empty type"""
        return [v for v, payload in enumerate(self.quotient.scwol.vertices) if payload_type(payload) == frozenset()]

    def check(self) -> CheckReport:
        """
        Check the shape of Z_n: one chamber image per level glued in a chain, one cone point each
        :return: CheckReport
        """
        report = CheckReport("fundamental domain")
        n = self.action.y.n
        orbits = chamber_orbits(self.action)
        for orbit in orbits:
            if len({cid.level for cid in orbit}) != 1 or len(orbit) != self.action.y.level_counts()[orbit[0].level]:
                report.add("transitive on levels", f"orbit of {orbit[0]}", f"{len(orbit)} chambers")
        if len(orbits) != n:
            report.add("chamber images", "Z_n", f"{len(orbits)} chamber images, expected {n}")
        if len(self.cone_points()) != n:
            report.add("cone points", "Z_n", f"{len(self.cone_points())} vertices of empty type, expected {n}")
        meetings = {tuple(sorted(edge)) for edge in self.chain.edges}
        if meetings != {(k, k + 1) for k in range(1, n)}:
            report.add("chain", "Z_n", f"chamber images meet along {sorted(self.chain.edges)}")
        report.stats = {
            "quotient_vertices": len(self.quotient.scwol.vertices),
            "quotient_edges": len(self.quotient.scwol.edges),
            "cone_points": len(self.cone_points()),
        }
        return report


def fundamental_domain(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
                       action: Optional[ChamberAction] = None) -> FundamentalDomain:
    """
    Build Z_n from the orbits of the subdivided action
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param action: Prebuilt action on Y_n
    :return: FundamentalDomain
    """
    action = action or act_on_Yn(wit, sys, n, bounds)
    y = action.y
    quotient = quotient_scwol(action.action)
    lifts = {k: ChamberId(k, (0,) * (n - k)) for k in range(1, n + 1)}
    identified = {1: ()}
    for k in range(2, n + 1):
        identified[k] = tuple(wit.alpha(k - 1).orbit(wit.s(k - 1)))

    chain = nx.Graph()
    chain.add_nodes_from(range(1, n + 1))
    for vertex in y.vertices:
        if vertex.is_shared:
            lower, upper = sorted(vertex.chambers)
            chain.add_edge(lower.level, upper.level, mirror=wit.s(lower.level))
    logger.debug("Z_%d: %d quotient vertices", n, len(quotient.scwol.vertices))
    return FundamentalDomain(action, quotient, lifts, identified, chain)
