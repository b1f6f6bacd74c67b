"""
Induced complexes H(Z_n) and exact covolumes.

The covolume of a complex of groups is the sum of 1/|G_v| over its vertices of empty type; the
closed-form series sums 1/|H_k| for k = 1..n. Both are computed exactly and reported side by side.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from davis_lattice.action.actions import GroupsAction, act_on_GYn
from davis_lattice.action.wreath import wreath_group
from davis_lattice.cog.complex import ComplexOfGroups, validate_cog
from davis_lattice.cog.morphism import CogMorphism, validate_covering, validate_morphism
from davis_lattice.cog.quotient import (InducedQuotientData, canonical_morphism_to_group, check_canonical_kernels,
                                        induce_quotient_cog)
from davis_lattice.cog.scwol import payload_type
from davis_lattice.config import Bounds
from davis_lattice.coxeter.system import CoxeterSystem
from davis_lattice.nerve.witness import Witness
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


def covolume(c: ComplexOfGroups) -> Fraction:
    """
    Sum of 1/|G_v| over the vertices of empty type
    :param c: Complex of groups with typed vertex payloads
    :return: Exact rational
    """
    return sum(
        (Fraction(1, c.local[v].size) for v, payload in enumerate(c.scwol.vertices)
         if payload_type(payload) == frozenset()),
        Fraction(0),
    )


def covolume_series(wit: Witness, n: int) -> List[Fraction]:
    """Partial sums of 1/|H_k| for k = 1..n"""
    sums, total = [], Fraction(0)
    for k in range(1, n + 1):
        total += Fraction(1, wreath_group(wit, k).order)
        sums.append(total)
    return sums


@dataclass(frozen=True, eq=False)
class InducedLattice:
    """H(Z_n) with the covering G(Y_n) -> H(Z_n) and the map H(Z_n) -> H_n."""

    groups_action: GroupsAction
    hz: ComplexOfGroups
    covering: CogMorphism
    data: InducedQuotientData
    to_group: CogMorphism

    def checks(self) -> List[CheckReport]:
        """
        Validate the induced complex, the covering and the canonical morphism
        :return: One CheckReport per suite
        """
        induced = validate_cog(self.hz)
        induced.name = "induced complex of groups"
        covering = validate_covering(self.covering)
        covering.name = "induced covering"
        canonical = validate_morphism(self.to_group)
        canonical.name = "canonical morphism"
        canonical.extend(check_canonical_kernels(self.hz, self.data, self.to_group))
        return [induced, covering, canonical]


def induce_HZn(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
               groups_action: Optional[GroupsAction] = None) -> InducedLattice:
    """
    Induce H(Z_n) from the H_n action on G(Y_n)
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param groups_action: Prebuilt action on G(Y_n)
    :return: InducedLattice
    """
    groups_action = groups_action or act_on_GYn(wit, sys, n, bounds)
    hz, covering, data = induce_quotient_cog(groups_action.complex_action)
    return InducedLattice(groups_action, hz, covering, data, canonical_morphism_to_group(hz, data))


@dataclass(frozen=True)
class VertexRow:
    level: int
    stab_order: int
    orbit: int


@dataclass
class CovolumeReport:
    n: int
    direct_value: Fraction
    series_value: Fraction
    group_order: int
    chamber_count: int
    per_vertex: List[VertexRow] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return self.direct_value == self.series_value

    def consistency(self) -> CheckReport:
        """
        Orbit-stabilizer at every cone point, orbits covering all chambers, direct value
        equal to the sum over the table
        :return: CheckReport
        """
        report = CheckReport(f"covolume consistency n={self.n}")
        for row in self.per_vertex:
            if row.stab_order * row.orbit != self.group_order:
                report.add("orbit-stabilizer", f"level {row.level}",
                           f"{row.stab_order} * {row.orbit} != {self.group_order}")
        if sum(row.orbit for row in self.per_vertex) != self.chamber_count:
            report.add("chamber count", "cone points", f"orbits do not add up to {self.chamber_count} chambers")
        if sum((Fraction(1, row.stab_order) for row in self.per_vertex), Fraction(0)) != self.direct_value:
            report.add("direct value", "cone points", "table does not sum to the direct value")
        return report

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "direct": str(self.direct_value),
            "series": str(self.series_value),
            "per_vertex": [
                {"level": row.level, "stab_order": row.stab_order, "orbit": row.orbit} for row in self.per_vertex
            ],
            "agree": self.agreement,
        }


def covolume_report(wit: Witness, sys: CoxeterSystem, n: int, bounds: Bounds = Bounds(),
                    induced: Optional[InducedLattice] = None) -> CovolumeReport:
    """
    Compute the direct covolume of H(Z_n) and the series value for the same truncation
    :param wit: Witness
    :param sys: Coxeter system
    :param n: Truncation level
    :param bounds: Resource bounds
    :param induced: Prebuilt H(Z_n)
    :return: CovolumeReport
    """
    induced = induced or induce_HZn(wit, sys, n, bounds)
    action = induced.groups_action.chamber_action
    subdivided = action.action
    rows = []
    for tau, lift in enumerate(induced.data.lifts):
        if payload_type(subdivided.scwol.vertices[lift]) != frozenset():
            continue
        head = action.subdivision.head(lift)
        rows.append(VertexRow(
            level=action.y.vertices[head].chamber.level,
            stab_order=len(induced.data.stabilizers[tau]),
            orbit=len(subdivided.vertex_orbit(lift)),
        ))
    rows.sort(key=lambda row: row.level)
    report = CovolumeReport(
        n=n,
        direct_value=covolume(induced.hz),
        series_value=covolume_series(wit, n)[-1],
        group_order=action.group.size,
        chamber_count=len(action.y.chambers),
        per_vertex=rows,
    )
    logger.debug("Covolume n=%d: direct %s, series %s", n, report.direct_value, report.series_value)
    return report


def covolume_trend(reports: Sequence[CovolumeReport]) -> Dict[str, Any]:
    """
    Summarise a table of covolume reports over increasing n
    :param reports: Reports ordered by n
    :return: Values, differences and monotonicity of both columns
    """
    direct = [r.direct_value for r in reports]
    series = [r.series_value for r in reports]
    return {
        "n": [r.n for r in reports],
        "direct": [str(v) for v in direct],
        "series": [str(v) for v in series],
        "difference": [str(d - s) for d, s in zip(direct, series)],
        "direct_increasing": all(a < b for a, b in zip(direct, direct[1:])),
        "series_increasing": all(a < b for a, b in zip(series, series[1:])),
        "agree_all": all(r.agreement for r in reports),
    }
