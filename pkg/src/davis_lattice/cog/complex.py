import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from davis_lattice.cog.scwol import Scwol, Subdivision, payload_type, subdivide
from davis_lattice.coxeter.group import FiniteGroupTable, is_homomorphism
from davis_lattice.error import ConstructionError
from davis_lattice.report import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ComplexOfGroups:
    """
    Local groups over a scwol, injective edge maps psi[a]: G_i(a) -> G_t(a) given as index arrays,
    and twist elements g_{a,b} in G_t(a) (trivial unless listed).
    """

    scwol: Scwol
    local: Tuple[FiniteGroupTable, ...]
    psi: Tuple[np.ndarray, ...]
    twist: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    edge_info: Tuple[Any, ...] = ()
    name: str = ""

    def g(self, a: int, b: int) -> int:
        return self.twist.get((a, b), 0)

    @property
    def is_simple(self) -> bool:
        return not any(self.twist.values())

    def local_orders(self) -> Tuple[int, ...]:
        return tuple(group.size for group in self.local)

    def with_twist(self, twist: Mapping[Tuple[int, int], int]) -> "ComplexOfGroups":
        return ComplexOfGroups(self.scwol, self.local, self.psi, dict(twist), self.edge_info, self.name)

    def with_psi(self, a: int, images: np.ndarray) -> "ComplexOfGroups":
        psi = list(self.psi)
        psi[a] = np.asarray(images, dtype=np.int64)
        return ComplexOfGroups(self.scwol, self.local, tuple(psi), self.twist, self.edge_info, self.name)


def _edge_location(c: ComplexOfGroups, *edges: int) -> str:
    parts = []
    for a in edges:
        i, t = c.scwol.edges[a]
        parts.append(f"{a}:{c.scwol.vertices[i]}->{c.scwol.vertices[t]}")
    return "edges " + ", ".join(parts)


def validate_cog(c: ComplexOfGroups) -> CheckReport:
    """
    Exhaustively check a complex of groups
    :param c: Complex of groups
    :return: CheckReport over injectivity, compatibility and the cocycle condition
    """
    report = CheckReport("complex of groups")
    scwol = c.scwol
    for a, (i, t) in enumerate(scwol.edges):
        src, dst, images = c.local[i], c.local[t], c.psi[a]
        if images.shape != (src.size,) or images.min(initial=0) < 0 or images.max(initial=0) >= dst.size:
            report.add("edge map", _edge_location(c, a), "image array does not fit the local groups")
            continue
        if not is_homomorphism(src, dst, images):
            report.add("edge map homomorphism", _edge_location(c, a))
        if len(np.unique(images)) != src.size:
            report.add("edge map injective", _edge_location(c, a))
    if report.violations:
        return report

    pairs = scwol.composable_pairs()
    for a, b in pairs:
        ab = scwol.compose(a, b)
        group = c.local[scwol.t(a)]
        x = c.g(a, b)
        lhs = group.mult[group.mult[x, c.psi[ab]], group.inv[x]]
        rhs = c.psi[a][c.psi[b]]
        if not np.array_equal(lhs, rhs):
            report.add("compatibility", _edge_location(c, a, b), "Ad(g_ab) psi_ab != psi_a psi_b")

    triples = scwol.composable_triples() if c.twist else []
    for a, b, d in triples:
        group = c.local[scwol.t(a)]
        ab, bd = scwol.compose(a, b), scwol.compose(b, d)
        lhs = group.mult[c.psi[a][c.g(b, d)], c.g(a, bd)]
        rhs = group.mult[c.g(a, b), c.g(ab, d)]
        if lhs != rhs:
            report.add("cocycle", _edge_location(c, a, b, d), f"{lhs} != {rhs}")
    report.stats = {"vertices": len(scwol.vertices), "edges": len(scwol.edges),
                    "pairs": len(pairs), "triples": len(triples)}
    return report


def has_trivial_type0_groups(c: ComplexOfGroups) -> bool:
    """
    Check that every type-empty vertex carries the trivial group
    :param c: Complex of groups with typed vertex payloads
    :return: True iff all local groups at type-empty vertices have order 1
    """
    return all(
        c.local[v].size == 1
        for v, payload in enumerate(c.scwol.vertices)
        if payload_type(payload) == frozenset()
    )


def identity_map(group: FiniteGroupTable) -> np.ndarray:
    return np.arange(group.size, dtype=np.int64)


def simple_complex(scwol: Scwol, local: Sequence[FiniteGroupTable], psi: Sequence[np.ndarray],
                   edge_info: Sequence[Any] = (), name: str = "") -> ComplexOfGroups:
    return ComplexOfGroups(scwol, tuple(local), tuple(np.asarray(p, dtype=np.int64) for p in psi), {},
                           tuple(edge_info), name)


def subdivide_complex(c: ComplexOfGroups, subdivision: Optional[Subdivision] = None) -> Tuple[ComplexOfGroups, Subdivision]:
    """
    Carry a simple complex of groups over the barycentric subdivision
    :param c: Simple complex of groups
    :param subdivision: Precomputed subdivision of c.scwol
    :return: Tuple (subdivided complex, subdivision); chains carry the group of their head vertex
    """
    if not c.is_simple:
        raise ConstructionError("Only simple complexes of groups can be subdivided")
    subdivision = subdivision or subdivide(c.scwol)
    local = tuple(c.local[chain.head] for chain in subdivision.chains)
    psi = []
    info = []
    for a in range(len(subdivision.scwol.edges)):
        base = subdivision.base_edge(a)
        if base is None:
            psi.append(identity_map(local[subdivision.scwol.i(a)]))
            info.append(None)
        else:
            psi.append(c.psi[base])
            info.append(c.edge_info[base] if c.edge_info else None)
    logger.debug("Subdivided %s: %d vertices, %d edges", c.name or "complex", len(local), len(psi))
    return simple_complex(subdivision.scwol, local, psi, info, f"{c.name}'"), subdivision


def local_order_profile(c: ComplexOfGroups) -> Dict[Any, Tuple[int, ...]]:
    """Sorted local group orders grouped by vertex type"""
    profile: Dict[Any, list] = {}
    for v, payload in enumerate(c.scwol.vertices):
        key = payload_type(payload)
        key = tuple(sorted(key)) if key is not None else None
        profile.setdefault(key, []).append(c.local[v].size)
    return {k: tuple(sorted(v)) for k, v in profile.items()}
